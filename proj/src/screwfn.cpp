#include "screwline/screwfn.hpp"

#include <algorithm>
#include <cmath>

#include "screwline/specfun.hpp"

namespace screw::screwfn {

namespace {

// zeta(1-k, 1/4) = -B_k(1/4)/k, k = 1..8 (exact rationals)
constexpr double kZetaNegQuarter[8] = {
    1.0 / 4.0,   1.0 / 96.0,     -1.0 / 64.0,     -7.0 / 15360.0,
    5.0 / 1024.0, 31.0 / 516096.0, -61.0 / 16384.0, -127.0 / 7864320.0};

// e^{-tau/2} Phi(e^{-2tau}, s, 1/4) degenerates as tau -> 0 (the series at
// x -> 1 needs ~1/tau terms), so below tau = 0.1 both are evaluated through
// the lambda = 2 tau expansion
//   sum_n e^{-lambda(n+1/4)}(n+1/4)^{-2}
//     = zeta(2,1/4) + lambda (ln lambda - 1 + gamma0 + psi(1/4))
//       - sum_k zeta(1-k,1/4) (-1)^k lambda^{k+1}/(k+1)!
// and its -d/dlambda analogue for s = 1.  Truncation error < 1e-15 at
// tau = 0.1 with eight terms.
double lerch_exp2_quarter(const ScrewContext& ctx, double tau) {
    if (tau >= 0.1)
        return std::exp(-0.5 * tau) *
               specfun::lerch_phi(std::exp(-2.0 * tau), 2, {0.25, 0.0}).real();
    double lam = 2.0 * tau;
    double acc = ctx.trigamma_quarter +
                 lam * (std::log(lam) - 1.0 + specfun::euler_gamma + ctx.psi_quarter);
    double pw = lam; // lambda^k...
    double fact = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= 8; ++k) {
        pw *= lam;
        fact *= k + 1;
        acc -= kZetaNegQuarter[k - 1] * sign * pw / fact;
        sign = -sign;
    }
    return acc;
}

double lerch_exp1_quarter(const ScrewContext& ctx, double tau) {
    if (tau >= 0.1)
        return std::exp(-0.5 * tau) *
               specfun::lerch_phi(std::exp(-2.0 * tau), 1, {0.25, 0.0}).real();
    double lam = 2.0 * tau;
    double acc = -std::log(lam) - specfun::euler_gamma - ctx.psi_quarter;
    double pw = 1.0;
    double fact = 1.0;
    for (int k = 1; k <= 8; ++k) {
        pw *= -lam;
        fact *= k;
        acc += kZetaNegQuarter[k - 1] * pw / fact;
    }
    return acc;
}

// Jump points of g' inside [0, hi]: log of every prime power in the table.
std::vector<double> jump_points(const MangoldtTable& table, double hi) {
    std::vector<double> out;
    auto bound = static_cast<std::uint64_t>(std::floor(std::exp(std::min(
                     hi, std::log(static_cast<double>(table.bound)))) +
                 1e-12));
    bound = std::min(bound, table.bound);
    for (std::uint64_t n = 2; n <= bound; ++n)
        if (table.values[n] != 0.0) out.push_back(std::log(static_cast<double>(n)));
    return out;
}

} // namespace

ScrewContext::ScrewContext(MangoldtTable table) : mangoldt(std::move(table)) {
    psi_quarter = specfun::digamma({0.25, 0.0}).real();
    trigamma_quarter = specfun::trigamma({0.25, 0.0}).real();
    log_pi = specfun::log_pi;
}

double g(const ScrewContext& ctx, double t) {
    double tt = std::abs(t);
    if (tt == 0.0) return 0.0;

    double e_half = std::exp(0.5 * tt);
    double e_mhalf = 1.0 / e_half;
    double exp_term = -4.0 * (e_half + e_mhalf - 2.0);
    double linear_term = -0.5 * tt * (ctx.psi_quarter - ctx.log_pi);
    // Phi(1,2,1/4) is trigamma(1/4); the x=1 series itself is never summed.
    double lerch_term = -0.25 * (ctx.trigamma_quarter - lerch_exp2_quarter(ctx, tt));
    double prime_term = arith::prime_sum_g(tt, ctx.mangoldt);
    return exp_term + linear_term + lerch_term + prime_term;
}

double g_prime(const ScrewContext& ctx, double t) {
    if (t <= 0.0) throw DomainError("g_prime: t must be positive");
    double et = std::exp(t);
    // reject t within 1e-9 of a jump point log n (Lambda(n) != 0)
    for (std::uint64_t n : {static_cast<std::uint64_t>(std::floor(et + 0.5)),
                            static_cast<std::uint64_t>(std::floor(et + 0.5)) + 1}) {
        if (n < 2 || n > ctx.mangoldt.bound) continue;
        if (ctx.mangoldt.values[n] == 0.0) continue;
        if (std::abs(t - std::log(static_cast<double>(n))) < 1e-9)
            throw JumpPointError("g_prime: t within 1e-9 of a jump point log n");
    }
    double e_half = std::exp(0.5 * t);
    double e_mhalf = 1.0 / e_half;
    double minus_gp = 2.0 * (e_half - e_mhalf) - arith::prime_sum_plain(t, ctx.mangoldt) +
                      0.5 * (ctx.psi_quarter - ctx.log_pi) + 0.5 * lerch_exp1_quarter(ctx, t);
    return -minus_gp;
}

double g_kernel(const ScrewContext& ctx, double t, double u) {
    return g(ctx, t - u) - g(ctx, t) - g(ctx, u);
}

Estimate herm_form_gg(const ScrewContext& ctx, const TestFunction& phi1,
                      const TestFunction& phi2, double tol) {
    const double a1 = phi1.support_lo(), b1 = phi1.support_hi();
    const double a2 = phi2.support_lo(), b2 = phi2.support_hi();

    double reach = std::max({std::abs(a1), std::abs(b1), std::abs(a2), std::abs(b2),
                             std::abs(b2 - a1), std::abs(b1 - a2)});
    std::vector<double> logs = jump_points(ctx.mangoldt, reach + 1.0);

    // Magnitude scale for absolute tolerances: the form is evaluated through
    // heavy cancellation, so tolerances must be anchored to the integrand
    // mass, not the final value.
    double kernel_scale = 0.0;
    for (double t : {a2, 0.5 * (a2 + b2), b2})
        for (double u : {a1, 0.5 * (a1 + b1), b1})
            kernel_scale = std::max(kernel_scale, std::abs(g_kernel(ctx, t, u)));
    kernel_scale = std::max(kernel_scale, 1e-6);
    double mass1 = std::abs(phi1.amplitude) * phi1.half_width;
    double mass2 = std::abs(phi2.amplitude) * phi2.half_width;
    if (phi1.kind == TestFunction::Kind::bump_derivative) mass1 = std::abs(phi1.amplitude);
    if (phi2.kind == TestFunction::Kind::bump_derivative) mass2 = std::abs(phi2.amplitude);
    const double scale = kernel_scale * mass1 * mass2;

    double inner_err_max = 0.0;

    auto inner = [&](double t) {
        analysis::QuadOptions opts;
        opts.rel_tol = tol * 1e-3;
        opts.abs_tol = tol * scale * 1e-3;
        opts.max_nodes = 100000;
        opts.breakpoints.clear();
        for (double ln : logs) {
            opts.breakpoints.push_back(ln);      // kink of g(u)
            opts.breakpoints.push_back(t - ln);  // kinks of g(t-u)
            opts.breakpoints.push_back(t + ln);
        }
        auto r = analysis::adaptive_quad(
            [&](double u) { return g_kernel(ctx, t, u) * phi1(u); }, a1, b1, opts);
        inner_err_max = std::max(inner_err_max, r.error);
        return r.value;
    };

    analysis::QuadOptions outer;
    outer.rel_tol = tol * 0.1;
    outer.abs_tol = tol * scale * 0.1;
    outer.max_nodes = 100000;
    outer.breakpoints.assign(logs.begin(), logs.end());
    auto r = analysis::adaptive_quad([&](double t) { return inner(t) * phi2(t); }, a2, b2,
                                     outer);

    Estimate est;
    est.value = r.value;
    est.quad_error = r.error + inner_err_max * (b2 - a2) * std::abs(phi2.amplitude);
    return est;
}

} // namespace screw::screwfn
