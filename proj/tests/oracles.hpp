#pragma once

// Independent oracles for the special functions and quadratures.  Everything
// here deliberately uses different algorithms than the library:
//   log_gamma   -> Lanczos (g=7, 15 digits) instead of recurrence+Stirling
//   digamma     -> direct series of the classical expansion with a midpoint
//                  tail correction, instead of recurrence+asymptotics
//   trigamma    -> direct (w+n)^{-2} series with tail correction
//   zeta        -> Borwein's alternating-eta acceleration (low heights)
//   lerch_phi   -> plain term loop with no tail logic
//   integrals   -> dense composite Simpson / trapezoid grids

#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

Complex log_gamma_lanczos(Complex s);
Complex digamma_series(Complex w);
Complex trigamma_series(Complex w);
Complex zeta_borwein(Complex s); // |Im s| <= ~30
Complex lerch_brute(double x, int s, Complex a, int n_terms);
double euler_gamma_limit(); // H_N - log N with correction terms

// composite Simpson on a fixed grid
double simpson(const std::function<double(double)>& f, double a, double b, int n);
Complex simpson_c(const std::function<Complex(double)>& f, double a, double b, int n);

} // namespace oracle
