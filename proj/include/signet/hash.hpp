#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace signet {

/// FNV-1a 64-bit over a byte string. Used for content fingerprints in run
/// manifests; deterministic and dependency-free, not collision resistant.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

}  // namespace signet
