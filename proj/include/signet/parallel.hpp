#pragma once

#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace signet {

/// Clamps a requested worker count to something sane; 0 means "all cores".
inline unsigned resolve_thread_count(unsigned requested) {
    if (requested == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    return requested;
}

/// Splits [0, total) into one contiguous chunk per worker and runs
/// fn(lo, hi) -> R on each, returning the per-chunk results in ascending
/// chunk order. Callers merge by concatenation, which keeps results
/// independent of the worker count as long as fn is elementwise.
template <typename R, typename Fn>
std::vector<R> map_label_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
    threads = resolve_thread_count(threads);
    std::uint64_t chunk_count = threads;
    if (chunk_count > total) chunk_count = total == 0 ? 1 : total;

    if (chunk_count <= 1) {
        std::vector<R> out;
        out.push_back(fn(std::uint64_t{0}, total));
        return out;
    }

    std::vector<std::future<R>> futures;
    futures.reserve(chunk_count);
    const std::uint64_t base = total / chunk_count;
    const std::uint64_t rem = total % chunk_count;
    std::uint64_t lo = 0;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        const std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
        futures.push_back(std::async(std::launch::async, fn, lo, hi));
        lo = hi;
    }
    std::vector<R> out;
    out.reserve(chunk_count);
    for (auto& fut : futures) out.push_back(fut.get());
    return out;
}

}  // namespace signet
