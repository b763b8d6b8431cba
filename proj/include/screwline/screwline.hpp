#pragma once

#include <array>
#include <complex>
#include <optional>

#include "screwline/analysis.hpp"
#include "screwline/screwfn.hpp"
#include "screwline/zeros.hpp"

namespace screw::line {

using analysis::Estimate;
using analysis::QuadratureSpec;
using analysis::TestFunction;
using screwfn::ScrewContext;
using zeros::ZeroTable;
using Complex = std::complex<double>;

// Screw context plus quadrature defaults and the polygamma constants at 1/4
// feeding the small-z Taylor blocks.
struct ScrewLineContext {
    ScrewContext screw;
    QuadratureSpec quad_defaults;

    // p[k-1] = sum_{n>=0} (n+1/4)^{-(k+1)}, k = 1..5
    std::array<double, 5> polygamma_quarter{};

    explicit ScrewLineContext(ScrewContext ctx, QuadratureSpec spec = {});
};

// 1 + Theta(z) = 2 A(z)/E(z), evaluated through the gamma-free ratio
//   2 zeta(s) / ((1 + L(s)) zeta(s) + zeta'(s)),   s = 1/2 - iz,
//   L(s) = 1/s + 1/(s-1) - log(pi)/2 + digamma(s/2)/2,
// which is E with the common factor s(s-1)/2 pi^{-s/2} Gamma(s/2) cancelled.
// |Theta(z)| = 1 on the real axis.  precision_warning is set when the
// denominator loses more than 12 digits to cancellation.
Complex one_plus_theta(Complex z, bool* precision_warning = nullptr);

// The explicit-formula side P_t(z) of the screw line (four-block sum):
// rational terms, prime oscillation sum, the (e^{itz}-1)/(iz) completed-zeta
// bracket, and the digamma + Lerch difference blocks.  Analytic in z off the
// poles at -+i/2; t >= 0.
Complex frak_p(const ScrewLineContext& ctx, double t, Complex z);

// S_t(z) = i (1 + Theta(z)) / (2 sqrt(pi)) * P_t(z) for real z, extended to
// negative t by evenness.  With an exclusion table, values within 1e-6 of a
// table ordinate are refused.
Complex frak_s(const ScrewLineContext& ctx, double t, double z,
               const ZeroTable* exclusion = nullptr);

// ||S_t||^2_{L^2(R)} = 2 int_0^T |S_t(z)|^2 dz plus a fitted
// c log^2(z)/z^2 tail, with quadrature panels split at the table zeros.
Estimate norm_sq_quad(const ScrewLineContext& ctx, double t, const QuadratureSpec& spec,
                      const ZeroTable& table);

// P_hat_phi(z) = int S_t(z) phi(t) dt over the support of phi.
Complex p_hat_phi(const ScrewLineContext& ctx, const TestFunction& phi, double z);

// ||P_hat_phi||^2_{L^2(R)} by the same outer scheme as norm_sq_quad.
Estimate norm_sq_p_hat(const ScrewLineContext& ctx, const TestFunction& phi,
                       const QuadratureSpec& spec, const ZeroTable& table);

// Richardson extrapolation of Re frak_p(t, z) to z -> 0 along
// z = 0.1 * 2^{-k}, k = 0..6 (polynomial order 3 in z^2); the limit equals
// -g(t).
double frak_p_zero_limit(const ScrewLineContext& ctx, double t);

// lim_{y->inf} [ y P_t(iy) - digamma(1/4 + y/2)/2 + log(pi)/2 ] = -g'(t),
// extrapolated from y in {50, 100, 200, 400} by Richardson on the 1/y
// component.
struct SpecialValueResult {
    double value = 0.0;
    bool residuals_monotone = true;
    std::array<double, 4> bracket{};
};
SpecialValueResult special_value_limit(const ScrewLineContext& ctx, double t);

} // namespace screw::line
