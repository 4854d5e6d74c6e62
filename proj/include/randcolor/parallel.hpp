#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace randcolor {

/// RANDCOLOR_THREADS if set and positive, else the hardware concurrency.
inline unsigned default_thread_count()
{
    if (const char* env = std::getenv("RANDCOLOR_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) over contiguous blocks and returns the
/// results in index order. Callers derive any randomness from i, so the
/// output does not depend on the thread count.
template <class Result, class Fn>
std::vector<Result> run_indexed(std::size_t count, unsigned threads, Fn&& fn)
{
    std::vector<Result> out(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t block = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::size_t lo = t * block;
                const std::size_t hi = std::min(count, lo + block);
                for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace randcolor
