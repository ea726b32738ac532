#include "levyarc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace levyarc {

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LEVY_ARCSINE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), 256u);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace levyarc
