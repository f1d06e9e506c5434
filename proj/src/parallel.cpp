#include "edmatch/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace edmatch {

int thread_budget() {
    static const int budget = [] {
        int n = 0;
        if (const char* env = std::getenv("EDMATCH_THREADS")) {
            n = std::atoi(env);
        }
        if (n <= 0) {
            n = static_cast<int>(std::thread::hardware_concurrency());
        }
        return n > 0 ? n : 1;
    }();
    return budget;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    const int workers = std::min(thread_budget(), n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace edmatch
