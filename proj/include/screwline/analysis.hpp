#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "screwline/errors.hpp"

namespace screw::analysis {

using Complex = std::complex<double>;

// Smooth compactly supported test function: the standard exp(-1/(1-u^2))
// bump, or its exact derivative (which integrates to zero over R).
struct TestFunction {
    enum class Kind { bump, bump_derivative };

    double center = 0.0;
    double half_width = 1.0;
    double amplitude = 1.0;
    Kind kind = Kind::bump;

    double support_lo() const { return center - half_width; }
    double support_hi() const { return center + half_width; }

    double operator()(double t) const;

    // The parent bump of a bump_derivative (or the function itself).
    TestFunction parent() const;
    // The exact derivative of this bump.
    TestFunction derivative() const;
};

// Truncation radius, tolerance, node budget and tail-model switch for
// integrals over the whole real line.
struct QuadratureSpec {
    enum class TailModel { none, log_sq_over_t };

    double radius = 2000.0;
    double rel_tol = 1e-6;
    int max_nodes = 2000000;
    TailModel tail_model = TailModel::log_sq_over_t;
};

// A value with its explicit error decomposition.
struct Estimate {
    Complex value{};
    double quad_error = 0.0;
    double tail_bound = 0.0;
    double zero_trunc_bound = 0.0;

    double total_error() const { return quad_error + tail_bound + zero_trunc_bound; }
    double real_value() const { return value.real(); }
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_nodes = 200000;
    // Known structure: panel boundaries to seed, and an oscillation
    // frequency (rad per unit) used to size the initial panels.
    std::vector<double> breakpoints;
    double osc_freq = 0.0;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int nodes = 0;
};

struct QuadResultC {
    Complex value{};
    double error = 0.0;
    int nodes = 0;
};

// Adaptive Gauss-Kronrod (7-15) quadrature on [a, b].
QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                         const QuadOptions& opts = {});
QuadResultC adaptive_quad_complex(const std::function<Complex(double)>& f, double a, double b,
                                  const QuadOptions& opts = {});

// phi_hat(z) = int phi(t) e^{izt} dt over the support.  Entire in z; the
// |Im z| <= 1 guard keeps the quadrature scale bounded.
Complex fourier(const TestFunction& phi, Complex z);

// Callable wrapper used by the spectral forms.
std::function<Complex(double)> fourier_evaluator(const TestFunction& phi);

} // namespace screw::analysis
