#include "arbor/workers.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

int worker_count() {
    if (const char* env = std::getenv("ARBOR_WORKERS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 1024) {
            throw DomainError(std::string("ARBOR_WORKERS must be a positive integer, got '") + env + "'");
        }
        return static_cast<int>(v);
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body) {
    const auto workers = static_cast<std::uint64_t>(worker_count());
    if (workers <= 1 || count < 2 * workers) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex lock;
    std::vector<std::thread> pool;
    const std::uint64_t block = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * block;
        const std::uint64_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> guard(lock);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace arbor
