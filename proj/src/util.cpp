#include "screwline/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>

namespace screw::util {

namespace {

std::atomic<int> g_threads{0}; // 0 = not set yet

constexpr std::size_t kBlock = 1024;

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 4u));
}

} // namespace

int thread_count() {
    int n = g_threads.load(std::memory_order_relaxed);
    return n > 0 ? n : default_threads();
}

void set_thread_count(int n) {
    g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    if (n == 0) return;
    int nt = thread_count();
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(nt), n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= n) return;
                    f(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n, std::memory_order_relaxed); // stop other workers
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

double sum_blocked(std::size_t n, const std::function<double(std::size_t)>& term) {
    if (n == 0) return 0.0;
    std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for(nblocks, [&](std::size_t b) {
        NeumaierSum acc;
        std::size_t lo = b * kBlock;
        std::size_t hi = std::min(lo + kBlock, n);
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[b] = acc.get();
    });
    NeumaierSum total;
    for (double p : partial) total.add(p);
    return total.get();
}

Complex sum_blocked_complex(std::size_t n, const std::function<Complex(std::size_t)>& term) {
    if (n == 0) return {};
    std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<Complex> partial(nblocks, Complex{});
    parallel_for(nblocks, [&](std::size_t b) {
        NeumaierSumC acc;
        std::size_t lo = b * kBlock;
        std::size_t hi = std::min(lo + kBlock, n);
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[b] = acc.get();
    });
    NeumaierSumC total;
    for (Complex p : partial) total.add(p);
    return total.get();
}

} // namespace screw::util
