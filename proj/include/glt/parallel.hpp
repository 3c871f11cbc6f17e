#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace glt {

/// Runs fn(i) for i in [0, count) on up to `threads` workers over disjoint
/// contiguous chunks. Work items must write to disjoint state; the first
/// captured exception is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = threads < count ? threads : (unsigned)count;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = count * w / workers;
        std::size_t hi = count * (w + 1) / workers;
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace glt
