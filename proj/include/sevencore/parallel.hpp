#ifndef SEVENCORE_PARALLEL_HPP
#define SEVENCORE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sevencore
{

// out[i] = fn(first + i) for i in [0, count). Work is split into contiguous
// blocks, one per worker; each slot is written by exactly one worker, so the
// result does not depend on the thread count. The first exception thrown by
// any worker is rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> parallel_table(std::uint64_t first, std::size_t count, unsigned threads, Fn fn)
{
    std::vector<T> out(count);
    threads = std::max(1U, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(count / 64, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = fn(first + i);
        }
        return out;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    const std::size_t block = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(count, lo + block);
        workers.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) {
                    out[i] = fn(first + i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace sevencore

#endif
