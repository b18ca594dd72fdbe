#ifndef ACT_PARALLEL_HPP
#define ACT_PARALLEL_HPP

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace act {

// Index-parallel map with deterministic assembly: results land in input
// order no matter the thread schedule. fn must be safe to call concurrently.
template <class T>
std::vector<T> parallel_map(int count, int threads, const std::function<T(int)>& fn) {
    std::vector<T> results(static_cast<std::size_t>(count));
    if (count == 0) return results;
    if (threads < 1) threads = 1;
    threads = std::min(threads, count);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (int i = w; i < count; i += threads) results[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace act

#endif
