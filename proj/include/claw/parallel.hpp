#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace claw::parallel {

namespace detail {
inline std::atomic<int>& thread_count_ref() {
    static std::atomic<int> count{1};
    return count;
}
} // namespace detail

inline void set_threads(int n) { detail::thread_count_ref().store(n < 1 ? 1 : n); }
inline int threads() { return detail::thread_count_ref().load(); }

/// Run fn(i) for i in [begin, end) on up to `threads()` workers.  The index
/// range is split into contiguous blocks, so as long as iterations only write
/// to per-index slots the result is independent of the worker count.
template <typename Fn>
void parallel_for(std::int64_t begin, std::int64_t end, Fn&& fn) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    const int nt = static_cast<int>(std::min<std::int64_t>(threads(), count));
    if (nt <= 1) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nt));
    const std::int64_t chunk = (count + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const std::int64_t b = begin + t * chunk;
        const std::int64_t e = std::min(end, b + chunk);
        if (b >= e) break;
        workers.emplace_back([b, e, &fn] {
            for (std::int64_t i = b; i < e; ++i) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

/// Deterministic parallel sum: partial sums over fixed-size chunks (chunking
/// does not depend on the worker count), combined left to right.
template <typename Fn>
double parallel_sum(std::int64_t n, Fn&& term, std::int64_t chunk = 1 << 14) {
    if (n <= 0) return 0.0;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
    parallel_for(0, nchunks, [&](std::int64_t c) {
        const std::int64_t b = c * chunk;
        const std::int64_t e = std::min(n, b + chunk);
        double s = 0.0;
        for (std::int64_t i = b; i < e; ++i) s += term(i);
        partial[static_cast<std::size_t>(c)] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

} // namespace claw::parallel
