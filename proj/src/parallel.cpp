#include "nambu/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nambu {

std::size_t thread_count() {
    if (const char* env = std::getenv("NAMBU_WEIL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), 64);
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(n, 1));
    if (workers <= 1 || n <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t step = (n + workers - 1) / workers;
    std::size_t chunk = 0;
    for (std::size_t begin = 0; begin < n; begin += step, ++chunk) {
        const std::size_t end = std::min(begin + step, n);
        pool.emplace_back(fn, chunk, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace nambu
