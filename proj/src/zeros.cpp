#include "screwline/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "screwline/analysis.hpp"
#include "screwline/specfun.hpp"
#include "screwline/util.hpp"

namespace screw::zeros {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSafety = 1.2;
constexpr double kFirstZero = 14.1347;

} // namespace

ZeroTable ZeroTable::truncated_by_height(double h) const {
    ZeroTable out = *this;
    auto it = std::upper_bound(out.ordinates.begin(), out.ordinates.end(), h);
    auto n = static_cast<std::size_t>(it - out.ordinates.begin());
    out.ordinates.resize(n);
    out.multiplicities.resize(n);
    return out;
}

ZeroTable ZeroTable::first_n(std::size_t n) const {
    ZeroTable out = *this;
    n = std::min(n, out.ordinates.size());
    out.ordinates.resize(n);
    out.multiplicities.resize(n);
    return out;
}

void ZeroTable::validate() const {
    if (ordinates.size() != multiplicities.size())
        throw ValidationError("ZeroTable: ordinate/multiplicity length mismatch");
    double prev = 0.0;
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        if (!(ordinates[i] > 0.0))
            throw ValidationError("ZeroTable: ordinates must be positive");
        if (ordinates[i] <= prev)
            throw ValidationError("ZeroTable: ordinates must be strictly increasing");
        if (multiplicities[i] < 1)
            throw ValidationError("ZeroTable: multiplicities must be positive");
        prev = ordinates[i];
    }
    if (!ordinates.empty()) {
        if (std::abs(ordinates.front() - kFirstZero) > 1e-4)
            throw ValidationError("ZeroTable: first ordinate not within 1e-4 of 14.1347");
        double est = rvm_count(height());
        double count = 0.0;
        for (int m : multiplicities) count += m;
        if (std::abs(count - est) > 2.0)
            throw ValidationError(
                "ZeroTable: count inconsistent with the Riemann-von Mangoldt estimate");
    }
}

double rvm_count(double t) {
    if (t <= kTwoPi) return 0.0;
    double x = t / kTwoPi;
    return x * std::log(x) - x + 7.0 / 8.0;
}

double density_tail(double h, const std::function<double(double)>& f) {
    // gamma = h/u maps [h, inf) to (0, 1]; positive-ordinate density
    // log(gamma/2pi)/2pi, callers pass the +-pair bound in f.
    analysis::QuadOptions opts;
    opts.rel_tol = 1e-7;
    opts.max_nodes = 60000;
    auto r = analysis::adaptive_quad(
        [&](double u) {
            double gamma = h / u;
            double density = std::log(gamma / kTwoPi) / kTwoPi;
            return f(gamma) * density * h / (u * u);
        },
        1e-9, 1.0, opts);
    return kSafety * r.value;
}

ZeroTable parse_zeros(const std::string& text, ZeroTable::Source source) {
    ZeroTable table;
    table.source = source;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank or comment-only line
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        std::string extra;
        if (used != tok.size() || (ls >> extra)) {
            std::ostringstream msg;
            msg << "zero table: malformed line " << lineno;
            throw ParseError(msg.str());
        }
        table.ordinates.push_back(v);
        table.multiplicities.push_back(1);
    }
    table.validate();
    return table;
}

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("load_zeros: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zeros(buf.str());
}

void save_zeros(const ZeroTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("save_zeros: cannot open " + path + " for writing");
    out << "# positive ordinates of nontrivial zeta zeros, ascending\n";
    char line[64];
    for (double g : table.ordinates) {
        std::snprintf(line, sizeof line, "%.12f\n", g);
        out << line;
    }
    if (!out) throw Error("save_zeros: write failed for " + path);
}

ZeroTable locate_zeros(double t_max, double refine_tol) {
    if (t_max > 1e4) throw DomainError("locate_zeros: t_max beyond validated height 1e4");
    if (refine_tol <= 0.0) refine_tol = 1e-9;

    ZeroTable table;
    table.source = ZeroTable::Source::located;

    const double step = 0.05;
    const double z0 = 1e-3;
    if (t_max <= z0) return table;
    auto n_grid = static_cast<std::size_t>(std::floor((t_max - z0) / step)) + 1;

    std::vector<double> w(n_grid + 1);
    util::parallel_for(n_grid + 1, [&](std::size_t i) {
        double z = std::min(z0 + step * static_cast<double>(i), t_max);
        w[i] = specfun::xi_line_working(z);
    });

    for (std::size_t i = 0; i + 1 <= n_grid; ++i) {
        double a = z0 + step * static_cast<double>(i);
        double b = std::min(a + step, t_max);
        if (b <= a) break;
        double wa = w[i], wb = w[i + 1];
        if (wa == 0.0) wa = -wb; // grid hit a zero exactly
        if ((wa < 0.0) == (wb < 0.0)) continue;
        while (b - a > refine_tol) {
            double mid = 0.5 * (a + b);
            double wm = specfun::xi_line_working(mid);
            if ((wm < 0.0) == (wa < 0.0)) {
                a = mid;
                wa = wm;
            } else {
                b = mid;
            }
        }
        table.ordinates.push_back(0.5 * (a + b));
        table.multiplicities.push_back(1);
    }

    double est = rvm_count(t_max);
    if (std::abs(static_cast<double>(table.size()) - est) > 2.0) {
        std::ostringstream msg;
        msg << "locate_zeros: found " << table.size() << " sign changes up to " << t_max
            << " but the density estimate gives " << est
            << "; a multiple or close zero pair may have been missed";
        table.warnings.push_back(msg.str());
    }
    return table;
}

namespace {

void require_nonempty(const ZeroTable& table, const char* fn) {
    if (table.ordinates.empty()) throw DomainError(std::string(fn) + ": empty zero table");
}

} // namespace

ComplexWithTail p_t_zero_sum(double t, Complex z, const ZeroTable& table) {
    double tt = std::abs(t); // P_{-t} := P_t
    require_nonempty(table, "p_t_zero_sum");
    for (double s : {1.0, -1.0}) {
        // cheap proximity check against the ordinate closest to +-Re(z)
        auto it = std::lower_bound(table.ordinates.begin(), table.ordinates.end(),
                                   s * z.real() - 1.0);
        for (; it != table.ordinates.end() && *it <= s * z.real() + 1.0; ++it)
            if (std::abs(z - s * Complex(*it, 0.0)) < 1e-8)
                throw PoleProximityError("p_t_zero_sum: z within 1e-8 of a table zero");
    }

    const std::size_t n = table.size();
    Complex sum = util::sum_blocked_complex(n, [&](std::size_t k) {
        double gamma = table.ordinates[k];
        double m = table.multiplicities[k];
        // term(gamma) + term(-gamma) over the common denominator
        // gamma (z^2 - gamma^2):
        //   [2iz sin(gamma t) + 2 gamma (cos(gamma t) - 1)] / (gamma (z^2-gamma^2))
        double c = std::cos(gamma * tt), s = std::sin(gamma * tt);
        Complex num = 2.0 * Complex(0.0, 1.0) * z * s + 2.0 * gamma * (c - 1.0);
        Complex den = gamma * (z * z - gamma * gamma);
        return m * num / den;
    });

    double h = table.height();
    double az = std::abs(z);
    TailBound tail;
    tail.truncation_height = h;
    if (h > az + 1.0) {
        tail.bound = density_tail(
            h, [az](double gamma) { return 4.0 / (gamma * (gamma - az)); });
    } else {
        tail.bound = std::numeric_limits<double>::infinity();
    }
    return {sum, tail};
}

RealWithTail g_zero_sum(double t, const ZeroTable& table) {
    require_nonempty(table, "g_zero_sum");
    double tt = std::abs(t);
    const std::size_t n = table.size();
    double sum = util::sum_blocked(n, [&](std::size_t k) {
        double gamma = table.ordinates[k];
        double m = table.multiplicities[k];
        return 2.0 * m * (1.0 - std::cos(gamma * tt)) / (gamma * gamma);
    });
    double h = table.height();
    TailBound tail{h, density_tail(h, [](double gamma) { return 4.0 / (gamma * gamma); })};
    return {sum, tail};
}

RealWithTail norm_sq_zero_sum(double t, const ZeroTable& table) {
    require_nonempty(table, "norm_sq_zero_sum");
    double tt = std::abs(t);
    const std::size_t n = table.size();
    double sum = util::sum_blocked(n, [&](std::size_t k) {
        double gamma = table.ordinates[k];
        double m = table.multiplicities[k];
        Complex w = std::exp(Complex(0.0, gamma * tt)) - 1.0;
        return 2.0 * m * std::norm(w) / (gamma * gamma);
    });
    double h = table.height();
    TailBound tail{h, density_tail(h, [](double gamma) { return 8.0 / (gamma * gamma); })};
    return {sum, tail};
}

namespace {

// Empirical decay constant sup |f(gamma)| gamma^2 over the top half of the
// table, used to extrapolate transform tails.
double fitted_decay_constant(const std::vector<double>& mags, const ZeroTable& table) {
    double c = 0.0;
    std::size_t start = table.size() / 2;
    for (std::size_t k = start; k < table.size(); ++k) {
        double gamma = table.ordinates[k];
        c = std::max(c, mags[k] * gamma * gamma);
    }
    return c;
}

} // namespace

RealWithTail weil_form(const TransformEval& psi_hat, const ZeroTable& table) {
    require_nonempty(table, "weil_form");
    const std::size_t n = table.size();
    std::vector<double> mag_sq(n);
    util::parallel_for(n, [&](std::size_t k) {
        double gamma = table.ordinates[k];
        mag_sq[k] = std::norm(psi_hat(gamma)) + std::norm(psi_hat(-gamma));
    });
    double sum = util::sum_blocked(
        n, [&](std::size_t k) { return table.multiplicities[k] * mag_sq[k]; });

    std::vector<double> mags(n);
    for (std::size_t k = 0; k < n; ++k) mags[k] = std::sqrt(0.5 * mag_sq[k]);
    double c = fitted_decay_constant(mags, table);
    double h = table.height();
    TailBound tail{h, density_tail(h, [c](double gamma) {
                       double m = c / (gamma * gamma);
                       return 2.0 * m * m;
                   })};
    return {sum, tail};
}

RealWithTail gg_form_zero_sum(const TransformEval& phi_hat, const ZeroTable& table) {
    require_nonempty(table, "gg_form_zero_sum");
    const Complex phi0 = phi_hat(0.0);
    const std::size_t n = table.size();
    std::vector<double> term(n), mags(n);
    util::parallel_for(n, [&](std::size_t k) {
        double gamma = table.ordinates[k];
        Complex dp = phi_hat(gamma) - phi0;
        Complex dm = phi_hat(-gamma) - phi0;
        term[k] = (std::norm(dp) + std::norm(dm)) / (gamma * gamma);
        mags[k] = 0.5 * (std::abs(dp + phi0) + std::abs(dm + phi0));
    });
    double sum = util::sum_blocked(
        n, [&](std::size_t k) { return table.multiplicities[k] * term[k]; });

    double c = fitted_decay_constant(mags, table);
    double a0 = std::abs(phi0);
    double h = table.height();
    TailBound tail{h, density_tail(h, [c, a0](double gamma) {
                       double m = c / (gamma * gamma) + a0;
                       return 2.0 * m * m / (gamma * gamma);
                   })};
    return {sum, tail};
}

} // namespace screw::zeros
