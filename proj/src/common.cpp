#include "plcwt/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace plcwt {
namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
    if (v.size() <= 8) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum_impl(v.subspan(0, half)) + pairwise_sum_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v); }
Complex pairwise_sum(std::span<const Complex> v) { return pairwise_sum_impl(v); }

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("PLCWT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace plcwt
