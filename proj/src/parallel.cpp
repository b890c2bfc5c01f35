#include "svbreak/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace svbreak {

std::size_t worker_count() {
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1) workers = std::min<std::size_t>(workers, cap);
    }
    return workers;
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, n / 4096));
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& t : threads) t.join();
}

}  // namespace svbreak
