#include "signet/hash.hpp"

#include <cstdio>

namespace signet {

std::string to_hex(std::uint64_t value) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace signet
