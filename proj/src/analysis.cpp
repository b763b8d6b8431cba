#include "screwline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace screw::analysis {

double TestFunction::operator()(double t) const {
    double u = (t - center) / half_width;
    double u2 = u * u;
    if (u2 >= 1.0 - 1e-14) return 0.0;
    double base = amplitude * std::exp(-1.0 / (1.0 - u2));
    if (kind == Kind::bump) return base;
    double d = 1.0 - u2;
    return base * (-2.0 * u / (d * d)) / half_width;
}

TestFunction TestFunction::parent() const {
    TestFunction p = *this;
    p.kind = Kind::bump;
    return p;
}

TestFunction TestFunction::derivative() const {
    if (kind != Kind::bump)
        throw DomainError("TestFunction: only first derivatives of bumps are provided");
    TestFunction d = *this;
    d.kind = Kind::bump_derivative;
    return d;
}

namespace {

// QUADPACK 15-point Kronrod nodes/weights; Gauss-7 at odd indices + centre.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename V>
struct Panel {
    double a, b;
    V value;
    double error;
    double scale; // integral of |f|, for the relative test
};

template <typename V, typename F>
Panel<V> gk15(const F& f, double a, double b) {
    double h = 0.5 * (b - a);
    double c = 0.5 * (a + b);
    V fc = f(c);
    V res_k = kWgk[7] * fc;
    V res_g = kWg[3] * fc;
    double res_abs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        V f1 = f(c - x);
        V f2 = f(c + x);
        res_k += kWgk[j] * (f1 + f2);
        res_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
    }
    Panel<V> p;
    p.a = a;
    p.b = b;
    p.value = res_k * h;
    p.error = std::abs(res_k - res_g) * std::abs(h);
    p.scale = res_abs * std::abs(h);
    return p;
}

template <typename V, typename F>
std::pair<V, double> run_adaptive(const F& f, double a, double b, const QuadOptions& opts,
                                  int* nodes_out) {
    std::vector<double> edges{a, b};
    for (double x : opts.breakpoints)
        if (x > a && x < b) edges.push_back(x);
    if (opts.osc_freq > 0.0) {
        // ~2.4 oscillation periods per GK15 panel stay well inside the rule.
        double max_len = 12.0 / opts.osc_freq;
        std::vector<double> refined;
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            refined.push_back(edges[i]);
            double len = edges[i + 1] - edges[i];
            int pieces = static_cast<int>(std::ceil(len / max_len));
            for (int k = 1; k < pieces; ++k)
                refined.push_back(edges[i] + len * k / pieces);
        }
        refined.push_back(edges.back());
        edges = std::move(refined);
    }
    std::sort(edges.begin(), edges.end());

    auto cmp = [](const Panel<V>& x, const Panel<V>& y) { return x.error < y.error; };
    std::priority_queue<Panel<V>, std::vector<Panel<V>>, decltype(cmp)> queue(cmp);

    V total{};
    double queued_err = 0.0;
    double parked_err = 0.0; // panels at their own rounding floor: not refinable
    double total_scale = 0.0;
    int nodes = 0;
    auto push = [&](double lo, double hi) {
        Panel<V> p = gk15<V>(f, lo, hi);
        nodes += 15;
        total += p.value;
        total_scale += p.scale;
        // Rounding floor of the K-G estimate is ~1e-13 of the panel |f| mass;
        // below it splitting only restates noise.  Degenerate widths cannot
        // split at all.
        bool splittable = 0.5 * (lo + hi) > lo && 0.5 * (lo + hi) < hi;
        if (!splittable || p.error <= 1e-13 * p.scale) {
            parked_err += p.error;
        } else {
            queued_err += p.error;
            queue.push(p);
        }
    };
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) push(edges[i], edges[i + 1]);

    auto target = [&]() {
        // Never ask for less than the rounding noise of the |f| mass.
        return std::max({opts.abs_tol, opts.rel_tol * std::abs(total), 2e-13 * total_scale});
    };
    // Refining is useful only while the queued (reducible) share is a
    // meaningful part of the total; the parked share cannot shrink.
    auto worth_refining = [&]() {
        return queued_err > 0.02 * std::max(parked_err, target());
    };
    while (parked_err + queued_err > target() && worth_refining() && !queue.empty()) {
        if (nodes >= opts.max_nodes) {
            Panel<V> worst = queue.top();
            std::ostringstream msg;
            msg << "adaptive_quad: node budget exhausted; worst interval ["
                << worst.a << ", " << worst.b << "] error " << worst.error;
            throw QuadratureError(msg.str());
        }
        Panel<V> worst = queue.top();
        queue.pop();
        total -= worst.value;
        queued_err -= worst.error;
        total_scale -= worst.scale;
        double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }
    if (nodes_out) *nodes_out = nodes;
    return {total, parked_err + queued_err};
}

} // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                         const QuadOptions& opts) {
    QuadResult r;
    auto [v, e] = run_adaptive<double>(f, a, b, opts, &r.nodes);
    r.value = v;
    r.error = e;
    return r;
}

QuadResultC adaptive_quad_complex(const std::function<Complex(double)>& f, double a, double b,
                                  const QuadOptions& opts) {
    QuadResultC r;
    auto [v, e] = run_adaptive<Complex>(f, a, b, opts, &r.nodes);
    r.value = v;
    r.error = e;
    return r;
}

Complex fourier(const TestFunction& phi, Complex z) {
    if (std::abs(z.imag()) > 1.0)
        throw DomainError("fourier: |Im z| <= 1 required");
    if (phi.kind == TestFunction::Kind::bump_derivative && z == Complex(0.0, 0.0))
        return 0.0; // integral of an exact derivative
    QuadOptions opts;
    opts.rel_tol = 1e-11;
    opts.abs_tol = 1e-15 * std::abs(phi.amplitude) * phi.half_width;
    opts.osc_freq = std::abs(z.real());
    const Complex iz = Complex(0.0, 1.0) * z;
    auto r = adaptive_quad_complex(
        [&](double t) { return phi(t) * std::exp(iz * t); }, phi.support_lo(),
        phi.support_hi(), opts);
    return r.value;
}

std::function<Complex(double)> fourier_evaluator(const TestFunction& phi) {
    return [phi](double gamma) { return fourier(phi, Complex(gamma, 0.0)); };
}

} // namespace screw::analysis
