// The analytic screw line.
//
// Numerical notes:
//  * 1 + Theta and frak_p are never assembled from xi/E in linear space;
//    Gamma(s/2) underflows past |z| ~ 900, so the common gamma factor is
//    cancelled analytically (one_plus_theta) before anything is evaluated.
//  * Both difference blocks of frak_p are cancellation-free:
//      [psi(1/4) - psi(1/4 + iz/2)]/(2iz)   -> Taylor in iz/2 below |z|=1e-3,
//      the Lerch difference                 -> fused series
//        sum x^n / ((n+1/4)(n+1/4+iz/2)) valid for every z.
//  * L^2 norms integrate 2 int_0^T with panels split at the zero ordinates
//    (S_t is holomorphic across them but has structure at the zero-spacing
//    scale) and add a c log^2(z)/z^2 tail fitted on [T/2, T].

#include "screwline/screwline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "screwline/specfun.hpp"
#include "screwline/util.hpp"

namespace screw::line {

namespace {

using specfun::log_pi;

constexpr Complex kI{0.0, 1.0};
const double kInvTwoSqrtPi = 0.5 / std::sqrt(std::numbers::pi);

double polygamma_quarter_series(int k) {
    // p_k = sum_{n>=0} (n + 1/4)^{-(k+1)} with a midpoint tail correction.
    const int n_terms = 20000;
    util::NeumaierSum acc;
    for (int n = 0; n < n_terms; ++n) acc.add(std::pow(n + 0.25, -(k + 1)));
    double m = n_terms - 0.25; // (N - 1/2) + 1/4
    acc.add(std::pow(m, -k) / k);
    return acc.get();
}

} // namespace

ScrewLineContext::ScrewLineContext(ScrewContext ctx, QuadratureSpec spec)
    : screw(std::move(ctx)), quad_defaults(spec) {
    polygamma_quarter[0] = screw.trigamma_quarter;
    for (int k = 2; k <= 5; ++k) polygamma_quarter[k - 1] = polygamma_quarter_series(k);
}

namespace {

// Everything the line needs at one z from a single zeta pass:
// 1 + Theta(z) and the completed-zeta bracket of frak_p.
struct LineEval {
    Complex one_plus_theta;
    Complex lbracket; // (Z'/Z)(1/2-iz) - log(pi)/2 + digamma(1/4+iz/2)/2
    bool precision_warning = false;
};

LineEval line_eval(Complex z) {
    if (z.imag() < -1e-9) throw DomainError("one_plus_theta: Im z >= 0 required");
    Complex s = 0.5 - kI * z;
    if (std::abs(s - 1.0) < 1e-6)
        throw DomainError("one_plus_theta: z too close to i/2 (zeta pole)");
    auto zp = specfun::zeta_pair(s);
    Complex psi_s2 = specfun::digamma(0.5 * s);
    Complex psi_conj = specfun::digamma(0.25 + 0.5 * kI * z);

    LineEval ev;
    Complex l = 1.0 / s + 1.0 / (s - 1.0) - 0.5 * log_pi + 0.5 * psi_s2;
    Complex den = (1.0 + l) * zp.zeta + zp.zeta_prime;
    ev.precision_warning =
        std::abs(den) < 1e-12 * (std::abs(l * zp.zeta) + std::abs(zp.zeta_prime));
    ev.one_plus_theta = 2.0 * zp.zeta / den;

    Complex zlog = -0.5 * log_pi + 0.5 * psi_s2 + zp.zeta_prime / zp.zeta;
    ev.lbracket = zlog - 0.5 * log_pi + 0.5 * psi_conj;
    return ev;
}

} // namespace

Complex one_plus_theta(Complex z, bool* precision_warning) {
    LineEval ev = line_eval(z);
    if (precision_warning) *precision_warning = ev.precision_warning;
    return ev.one_plus_theta;
}

namespace {

// z-only parts of frak_p, shared across t by the inner quadratures.
struct FrakPCache {
    Complex z;
    Complex iz;
    Complex h; // iz/2
    Complex lbracket{};
    Complex dblock{};
    bool small_z = false;
};

FrakPCache make_cache(const ScrewLineContext& ctx, Complex z, const Complex* lbracket) {
    FrakPCache c;
    c.z = z;
    c.iz = kI * z;
    c.h = 0.5 * c.iz;
    if (std::abs(1.0 - 2.0 * c.iz) < 1e-10 || std::abs(1.0 + 2.0 * c.iz) < 1e-10)
        throw PoleError("frak_p: pole at z = -+ i/2");
    c.small_z = std::abs(z) < 1e-3;

    if (lbracket) {
        c.lbracket = *lbracket;
    } else {
        Complex s = 0.5 - c.iz;
        c.lbracket = specfun::zlog_deriv(s) - 0.5 * log_pi +
                     0.5 * specfun::digamma(0.25 + 0.5 * c.iz);
    }

    if (c.small_z) {
        const auto& p = ctx.polygamma_quarter;
        Complex h = c.h;
        c.dblock = 0.25 * (p[0] - h * (p[1] - h * (p[2] - h * (p[3] - h * p[4]))));
    } else {
        Complex psi_q(ctx.screw.psi_quarter, 0.0);
        c.dblock = -(psi_q - specfun::digamma(0.25 + c.h)) / (2.0 * c.iz);
    }
    return c;
}

// - e^{-t/2}/4 * sum_n x^n / ((n+1/4)(n+1/4+h)),  x = e^{-2t}
Complex lerch_block(double t, Complex h) {
    const double x = std::exp(-2.0 * t);
    const double log_x = -2.0 * t;
    util::NeumaierSumC acc;
    double xp = 1.0;
    const bool monotone_den = h.real() >= -0.2;
    const double im_floor = std::abs(h.imag());
    for (int n = 0; n < 2000000; ++n) {
        double base = n + 0.25;
        Complex den = base * (base + h);
        if (std::abs(base + h) < 1e-12)
            throw PoleProximityError("frak_p: Lerch block hit a pole of the a-series");
        acc.add(xp / den);
        xp *= x;
        double nb = base + 1.0;
        if (monotone_den) {
            double lower = std::max(im_floor, nb + h.real());
            // geometric bound, and (since (n+1/4)|n+1/4+h| >= n^2 here)
            // the x^{N+1}/N bound that rescues x -> 1
            double rem = std::min(xp / ((1.0 - x) * nb * std::max(lower, 1e-30)),
                                  xp / std::max(1.0, static_cast<double>(n)));
            double scale = std::max(std::abs(acc.get()), 1e-300);
            if (rem <= 1e-16 * scale) break;
        } else if (log_x * (n + 1) < -745.0 ||
                   (nb + h.real() > 1.0 && xp / ((1.0 - x) * nb * (nb + h.real())) <
                                               1e-16 * std::max(std::abs(acc.get()), 1e-300))) {
            break;
        }
    }
    return -0.25 * std::exp(-0.5 * t) * acc.get();
}

Complex frak_p_cached(const ScrewLineContext& ctx, double t, const FrakPCache& c) {
    if (t == 0.0) return 0.0;

    double e_half = std::exp(0.5 * t);
    Complex rational = 4.0 * (e_half - 1.0) / (1.0 - 2.0 * c.iz) +
                       4.0 * (1.0 / e_half - 1.0) / (1.0 + 2.0 * c.iz);

    Complex prime = arith::prime_sum_osc(t, c.z, ctx.screw.mangoldt);

    Complex wfac;
    if (c.small_z) {
        Complex u = c.iz * t;
        wfac = t * (1.0 + u * (1.0 / 2.0 + u * (1.0 / 6.0 + u * (1.0 / 24.0 +
                    u * (1.0 / 120.0 + u * (1.0 / 720.0 + u / 5040.0))))));
    } else {
        wfac = (std::exp(c.iz * t) - 1.0) / c.iz;
    }

    return rational - prime + wfac * c.lbracket + c.dblock + lerch_block(t, c.h);
}

} // namespace

Complex frak_p(const ScrewLineContext& ctx, double t, Complex z) {
    if (t < 0.0) throw DomainError("frak_p: t >= 0 required");
    if (t == 0.0) return 0.0;
    return frak_p_cached(ctx, t, make_cache(ctx, z, nullptr));
}

Complex frak_s(const ScrewLineContext& ctx, double t, double z, const ZeroTable* exclusion) {
    if (exclusion && !exclusion->ordinates.empty()) {
        double az = std::abs(z);
        auto it = std::lower_bound(exclusion->ordinates.begin(), exclusion->ordinates.end(), az);
        for (auto probe : {it, it == exclusion->ordinates.begin() ? it : std::prev(it)})
            if (probe != exclusion->ordinates.end() && std::abs(az - *probe) < 1e-6)
                throw ExclusionZoneError("frak_s: z inside the 1e-6 exclusion zone of a zero");
    }
    double tt = std::abs(t);
    if (tt == 0.0) return 0.0;
    Complex zc(z, 0.0);
    LineEval ev = line_eval(zc);
    return kI * ev.one_plus_theta * kInvTwoSqrtPi *
           frak_p_cached(ctx, tt, make_cache(ctx, zc, &ev.lbracket));
}

namespace {

// int_z^inf log^2(u)/u^2 du
double tail_shape_integral(double z) {
    double l = std::log(z);
    return (l * l + 2.0 * l + 2.0) / z;
}

// 2 int_0^T f + fitted tail, shared by norm_sq_quad and norm_sq_p_hat.
// f must be the one-sided |.|^2 integrand.
Estimate half_line_norm(const std::function<double(double)>& f, const QuadratureSpec& spec,
                        const ZeroTable& table) {
    if (spec.radius < 100.0)
        throw DomainError("norm quadrature: radius >= 100 required");
    const double T = spec.radius;

    std::vector<double> edges{0.0, 0.5 * T, T};
    for (double g : table.ordinates) {
        if (g >= T) break;
        edges.push_back(g);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const std::size_t n_panels = edges.size() - 1;

    // Scouting pass for the magnitude, then a refinement pass with
    // per-panel budgets proportional to panel length.
    std::vector<double> scout(n_panels);
    util::parallel_for(n_panels, [&](std::size_t i) {
        analysis::QuadOptions o;
        o.max_nodes = 45;
        o.abs_tol = 1e300; // one GK application, no refinement
        scout[i] = std::abs(analysis::adaptive_quad(f, edges[i], edges[i + 1], o).value);
    });
    double s0 = 0.0;
    for (double v : scout) s0 += v;
    s0 = std::max(s0, 1e-300);

    std::vector<double> vals(n_panels), errs(n_panels);
    int per_panel_nodes = std::max(600, static_cast<int>(spec.max_nodes / (n_panels + 1)));
    util::parallel_for(n_panels, [&](std::size_t i) {
        analysis::QuadOptions o;
        o.rel_tol = 0.3 * spec.rel_tol;
        o.abs_tol = 0.3 * spec.rel_tol * s0 * (edges[i + 1] - edges[i]) / T;
        o.max_nodes = per_panel_nodes;
        auto r = analysis::adaptive_quad(f, edges[i], edges[i + 1], o);
        vals[i] = r.value;
        errs[i] = r.error;
    });

    util::NeumaierSum vsum, esum, fitsum;
    for (std::size_t i = 0; i < n_panels; ++i) {
        vsum.add(vals[i]);
        esum.add(errs[i]);
        if (edges[i] >= 0.5 * T - 1e-12) fitsum.add(vals[i]);
    }

    Estimate est;
    double tail_half = 0.0;
    if (spec.tail_model == QuadratureSpec::TailModel::log_sq_over_t) {
        double denom = tail_shape_integral(0.5 * T) - tail_shape_integral(T);
        double c = std::max(0.0, fitsum.get()) / denom;
        tail_half = c * tail_shape_integral(T);
    }
    est.value = 2.0 * (vsum.get() + tail_half);
    est.quad_error = 2.0 * esum.get();
    est.tail_bound = 2.0 * tail_half;
    return est;
}

} // namespace

Estimate norm_sq_quad(const ScrewLineContext& ctx, double t, const QuadratureSpec& spec,
                      const ZeroTable& table) {
    double tt = std::abs(t);
    if (tt == 0.0) return {};
    auto f = [&](double z) {
        Complex zc(z, 0.0);
        LineEval ev = line_eval(zc);
        Complex v = kI * ev.one_plus_theta * kInvTwoSqrtPi *
                    frak_p_cached(ctx, tt, make_cache(ctx, zc, &ev.lbracket));
        return std::norm(v);
    };
    return half_line_norm(f, spec, table);
}

namespace {

Complex p_hat_value(const ScrewLineContext& ctx, const TestFunction& phi, double z) {
    Complex zc(z, 0.0);
    LineEval ev = line_eval(zc);
    FrakPCache cache = make_cache(ctx, zc, &ev.lbracket);
    analysis::QuadOptions o;
    o.rel_tol = 1e-7;
    o.abs_tol = 1e-13;
    o.osc_freq = std::abs(z);
    o.max_nodes = 400000;
    auto inner = analysis::adaptive_quad_complex(
        [&](double t) { return phi(t) * frak_p_cached(ctx, std::abs(t), cache); },
        phi.support_lo(), phi.support_hi(), o);
    return kI * ev.one_plus_theta * kInvTwoSqrtPi * inner.value;
}

} // namespace

Complex p_hat_phi(const ScrewLineContext& ctx, const TestFunction& phi, double z) {
    return p_hat_value(ctx, phi, z);
}

Estimate norm_sq_p_hat(const ScrewLineContext& ctx, const TestFunction& phi,
                       const QuadratureSpec& spec, const ZeroTable& table) {
    auto f = [&](double z) { return std::norm(p_hat_value(ctx, phi, z)); };
    return half_line_norm(f, spec, table);
}

namespace {

// Neville tableau evaluated at x = 0, capped at the given polynomial order.
double neville_to_zero(const std::vector<double>& xs, const std::vector<double>& vs,
                       int max_order) {
    const std::size_t n = xs.size();
    std::vector<std::vector<double>> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i].resize(std::min<std::size_t>(i, max_order) + 1);
        t[i][0] = vs[i];
        for (std::size_t j = 1; j < t[i].size(); ++j) {
            double xi = xs[i], xj = xs[i - j];
            t[i][j] = (xi * t[i - 1][j - 1] - xj * t[i][j - 1]) / (xi - xj);
        }
    }
    return t[n - 1].back();
}

} // namespace

double frak_p_zero_limit(const ScrewLineContext& ctx, double t) {
    std::vector<double> u, v;
    for (int k = 0; k <= 6; ++k) {
        double z = 0.1 * std::ldexp(1.0, -k);
        u.push_back(z * z); // Re frak_p is even in real z
        v.push_back(frak_p(ctx, t, {z, 0.0}).real());
    }
    return neville_to_zero(u, v, 3);
}

SpecialValueResult special_value_limit(const ScrewLineContext& ctx, double t) {
    if (t <= 0.0) throw DomainError("special_value_limit: t > 0 required");
    // stay away from every jump point log n
    double et = std::exp(t + 0.011);
    auto hi = static_cast<std::uint64_t>(std::floor(et)) + 1;
    hi = std::min<std::uint64_t>(hi, ctx.screw.mangoldt.bound);
    for (std::uint64_t n = 2; n <= hi; ++n) {
        if (ctx.screw.mangoldt.values[n] == 0.0) continue;
        if (std::abs(t - std::log(static_cast<double>(n))) <= 0.01)
            throw JumpPointError("special_value_limit: t within 0.01 of a jump point log n");
    }

    const std::array<double, 4> ys{50.0, 100.0, 200.0, 400.0};
    SpecialValueResult res;
    std::vector<double> xs, vs;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double y = ys[i];
        Complex p = frak_p(ctx, t, {0.0, y});
        double b = y * p.real() - 0.5 * specfun::digamma({0.25 + 0.5 * y, 0.0}).real() +
                   0.5 * log_pi;
        res.bracket[i] = b;
        xs.push_back(1.0 / y);
        vs.push_back(b);
    }
    res.value = neville_to_zero(xs, vs, 3);
    double prev = std::numeric_limits<double>::infinity();
    for (double b : res.bracket) {
        double r = std::abs(b - res.value);
        if (r > prev + 1e-12) res.residuals_monotone = false;
        prev = r;
    }
    return res;
}

} // namespace screw::line
