#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "screwline/errors.hpp"

namespace screw::zeros {

using Complex = std::complex<double>;

// Positive ordinates of nontrivial zeros, ascending, with multiplicities.
// Every summation over the zero set supplies the symmetric pair -gamma
// implicitly, so the table never stores negative ordinates.
struct ZeroTable {
    enum class Source { embedded, file, located };

    std::vector<double> ordinates;
    std::vector<int> multiplicities; // default all 1
    Source source = Source::embedded;
    std::vector<std::string> warnings;

    std::size_t size() const { return ordinates.size(); }
    double height() const { return ordinates.empty() ? 0.0 : ordinates.back(); }

    // Subset of zeros with ordinate <= h / the first n zeros.
    ZeroTable truncated_by_height(double h) const;
    ZeroTable first_n(std::size_t n) const;

    // Throws ValidationError naming the violated invariant.
    void validate() const;
};

// Absolute bound on everything omitted above the truncation height.
struct TailBound {
    double truncation_height = 0.0;
    double bound = 0.0;
};

// Riemann-von Mangoldt smooth zero-count estimate N(T).
double rvm_count(double t);

// Density model integral over the omitted positive ordinates:
//   1.2 * int_H^inf f(gamma) log(gamma/2pi)/(2pi) dgamma
// (callers pass f already summed over the +-gamma pair).
double density_tail(double h, const std::function<double(double)>& f);

// One positive decimal ordinate per line, ascending, '#' comments allowed.
ZeroTable load_zeros(const std::string& path);
void save_zeros(const ZeroTable& table, const std::string& path);
ZeroTable parse_zeros(const std::string& text,
                      ZeroTable::Source source = ZeroTable::Source::file);

// First 100 zeros baked into the library (located by locate_zeros and
// cross-checked against published tables).
ZeroTable embedded_zeros();

// Scan sign changes of xi(1/2 - iz) on (0, t_max] at step 0.05 and refine
// each bracket by bisection to refine_tol.  A count short of the
// Riemann-von Mangoldt estimate leaves a suspected-close-zero warning on
// the table.
ZeroTable locate_zeros(double t_max, double refine_tol);

struct ComplexWithTail {
    Complex value;
    TailBound tail;
};
struct RealWithTail {
    double value = 0.0;
    TailBound tail;
};

// P_t(z) = sum_gamma m (e^{i gamma t}-1)/gamma * 1/(z-gamma), paired over
// +-gamma.  Even extension in t.  Throws PoleProximityError within 1e-8 of
// a table ordinate.
ComplexWithTail p_t_zero_sum(double t, Complex z, const ZeroTable& table);

// sum_gamma m (1 - cos(gamma t))/gamma^2  (this equals -g(t))
RealWithTail g_zero_sum(double t, const ZeroTable& table);

// ||S_t||^2 = sum_gamma m |(e^{i gamma t}-1)/gamma|^2, computed from the
// complex form directly (kept independent of the g_zero_sum path).
RealWithTail norm_sq_zero_sum(double t, const ZeroTable& table);

using TransformEval = std::function<Complex(double)>;

// Weil form sum_gamma m psi_hat(gamma) conj(psi_hat(conj gamma)) over the
// real-zero table, i.e. sum over +-gamma of m |psi_hat(gamma)|^2.
RealWithTail weil_form(const TransformEval& psi_hat, const ZeroTable& table);

// sum_gamma m |(phi_hat(gamma) - phi_hat(0))/gamma|^2
RealWithTail gg_form_zero_sum(const TransformEval& phi_hat, const ZeroTable& table);

} // namespace screw::zeros
