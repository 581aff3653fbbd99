#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace beauville {

// Runs fn(lo, hi) over a partition of [0, total) on up to `jobs` threads.
// Workers must write only to disjoint preallocated slots; callers merge in
// index order, so results never depend on the thread count.  The first
// worker exception (by worker index) is rethrown after all threads join.
template <typename Fn>
void parallel_chunks(std::int64_t total, int jobs, Fn&& fn) {
    if (total <= 0) {
        return;
    }
    const std::int64_t workers =
        std::min<std::int64_t>(jobs < 1 ? 1 : jobs, total);
    if (workers <= 1) {
        fn(std::int64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::int64_t base = total / workers;
    const std::int64_t extra = total % workers;
    std::int64_t lo = 0;
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t hi = lo + base + (w < extra ? 1 : 0);
        pool.emplace_back([&fn, &errors, w, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace beauville
