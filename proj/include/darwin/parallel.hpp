#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace darwin {

// Ordered parallel map: fn(i) for i in [0, n), results placed by index so
// output is identical for any worker count. fn must be safe to run
// concurrently on distinct indices.
template <typename T>
std::vector<T> parallel_map(size_t n, int jobs, const std::function<T(size_t)>& fn) {
    std::vector<T> out(n);
    if (n == 0) return out;
    if (jobs < 1) jobs = 1;
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<size_t> next{0};
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= n) return;
                    out[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace darwin
