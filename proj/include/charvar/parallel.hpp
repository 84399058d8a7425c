#pragma once

// Index-ordered parallel map; results never depend on the thread count.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace charvar {

/// Process-wide override set by the CLI's --threads; 0 means unset.
inline std::atomic<unsigned>& thread_override() {
    static std::atomic<unsigned> v{0};
    return v;
}

/// Worker count: the override, else CHARVAR_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    if (unsigned o = thread_override().load()) return o;
    if (const char* env = std::getenv("CHARVAR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// out[i] = f(i) for i < count, evaluated on up to `threads` workers.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f, unsigned threads = 0) {
    if (threads == 0) threads = worker_count();
    std::vector<T> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace charvar
