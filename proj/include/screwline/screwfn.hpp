#pragma once

#include "screwline/analysis.hpp"
#include "screwline/arith.hpp"

namespace screw::screwfn {

using analysis::Estimate;
using analysis::TestFunction;
using arith::MangoldtTable;

// Sieve plus the constants that appear in every evaluation of g.
struct ScrewContext {
    MangoldtTable mangoldt;
    double psi_quarter = 0.0;      // digamma(1/4)
    double trigamma_quarter = 0.0; // trigamma(1/4) = Phi(1,2,1/4)
    double log_pi = 0.0;

    explicit ScrewContext(MangoldtTable table);
};

// The screw function
//   g(t) = -4(e^{t/2}+e^{-t/2}-2) - t/2 [psi(1/4) - log pi]
//          - 1/4 (Phi(1,2,1/4) - e^{-t/2} Phi(e^{-2t},2,1/4))
//          + sum_{n <= e^t} Lambda(n)/sqrt(n) (t - log n)
// extended to negative t by evenness.  g(0) = 0 exactly.
double g(const ScrewContext& ctx, double t);

// g'(t) for t > 0 away from the jump points t = log n:
//   -g'(t) = 2(e^{t/2}-e^{-t/2}) - sum_{n<=e^t} Lambda(n)/sqrt(n)
//            + 1/2 [psi(1/4) - log pi] + 1/2 e^{-t/2} Phi(e^{-2t},1,1/4)
double g_prime(const ScrewContext& ctx, double t);

// G_g(t,u) = g(t-u) - g(t) - g(u) + g(0)
double g_kernel(const ScrewContext& ctx, double t, double u);

// <phi1, phi2>_{G_g} = int int G_g(t,u) phi1(u) conj(phi2(t)) dt du by
// nested adaptive quadrature over the support rectangle, with panels seeded
// at the kink lines |t-u| = log n, t = log n, u = log n.
Estimate herm_form_gg(const ScrewContext& ctx, const TestFunction& phi1,
                      const TestFunction& phi2, double tol);

} // namespace screw::screwfn
