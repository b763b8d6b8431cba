#pragma once

#include <complex>
#include <cstddef>

#include "screwline/errors.hpp"

namespace screw::specfun {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log_pi      = 1.14472988584940017414342735135305871;

// Principal branch of log Gamma: upward recurrence into Re(w) >= 10, then the
// Stirling series.  Throws PoleError at non-positive integers.
Complex log_gamma(Complex s);

// Digamma (Gamma'/Gamma).  Upward recurrence into Re(w) >= 10 plus the
// asymptotic expansion.  Works on the whole plane minus the poles.
Complex digamma(Complex s);

// Trigamma (polygamma of order one), same scheme as digamma.
Complex trigamma(Complex s);

// Hurwitz-Lerch transcendent Phi(x, s, a) = sum_{n>=0} x^n (n+a)^{-s} for
// real 0 <= x < 1, s in {1, 2}, complex a.  Direct series with a geometric
// tail bound; refuses x >= 1 (the x -> 1 limits are rerouted through
// digamma/trigamma by the callers).
Complex lerch_phi(double x, int s, Complex a);

// Riemann zeta and its derivative on Re(s) > -1, |Im(s)| <= ~1e4, by
// Euler-Maclaurin summation; both come out of one shared pass.
struct ZetaPair {
    Complex zeta;
    Complex zeta_prime;
};
ZetaPair zeta_pair(Complex s);
Complex zeta(Complex s);
Complex zeta_prime(Complex s);

// Logarithmic derivative of the completed zeta Z(s) = pi^{-s/2} Gamma(s/2) zeta(s):
// (Z'/Z)(s) = -log(pi)/2 + digamma(s/2)/2 + (zeta'/zeta)(s).
Complex zlog_deriv(Complex s);

// Completed xi function  xi(s) = s(s-1)/2 * pi^{-s/2} Gamma(s/2) zeta(s),
// in linear space (usable for |Im s| up to ~1300 before underflow).
Complex xi_complete(Complex s);

// Sign-faithful working value for xi(1/2 - iz) on the real z axis.  The
// gamma factor underflows in linear space for |z| beyond ~900, so the
// locator uses exp(i Im log-parts) * zeta with the positive real magnitude
// dropped: same zeros, same sign pattern up to one global orientation.
double xi_line_working(double z);

namespace detail {

// Euler-Maclaurin core with an explicit cutoff, exposed for the
// cutoff-independence consistency test.
ZetaPair zeta_pair_with_cutoff(Complex s, std::size_t n_terms);

} // namespace detail

} // namespace screw::specfun
