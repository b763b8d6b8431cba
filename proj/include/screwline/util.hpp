#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace screw::util {

using Complex = std::complex<double>;

// Global worker-pool size.  All parallel reductions below are deterministic
// for any thread count: work is split into fixed blocks that are summed
// sequentially and combined in index order.
int thread_count();
void set_thread_count(int n);

// Compensated (Neumaier) accumulator.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double get() const { return s + c; }
};

struct NeumaierSumC {
    NeumaierSum re, im;
    void add(Complex x) {
        re.add(x.real());
        im.add(x.imag());
    }
    Complex get() const { return {re.get(), im.get()}; }
};

// Run f(i) for i in [0, n).  Chunked over the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// Deterministic blocked reduction of term(i) over [0, n).
double sum_blocked(std::size_t n, const std::function<double(std::size_t)>& term);
Complex sum_blocked_complex(std::size_t n, const std::function<Complex(std::size_t)>& term);

} // namespace screw::util
