#include "screwline/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "screwline/util.hpp"

namespace screw::cli {

namespace detail {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

zeros::ZeroTable resolve_zeros(const RunConfig& cfg, double min_height, std::ostream& err) {
    std::string path;
    if (cfg.zeros_path) {
        path = *cfg.zeros_path;
    } else if (const char* env = std::getenv("SCREWLINE_ZEROS")) {
        path = env;
    }
    if (!path.empty()) {
        auto table = zeros::load_zeros(path);
        if (table.height() < min_height)
            err << "warning: zero table height " << format_double(table.height())
                << " below the requested coverage " << format_double(min_height) << "\n";
        return table;
    }
    if (min_height > 240.0) {
        err << "note: locating zeros up to " << format_double(min_height)
            << " (pass --zeros FILE to reuse a table)\n";
        return zeros::locate_zeros(min_height, 1e-9);
    }
    auto table = zeros::embedded_zeros();
    double h = table.height();
    double tail = zeros::density_tail(h, [](double g) { return 4.0 / (g * g); });
    err << "warning: using the embedded 100-zero table (height "
        << format_double(h) << "); zero-sum tail bounds are ~"
        << format_double(tail) << "\n";
    return table;
}

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

// Row-oriented writer for the three output formats.
struct RowWriter {
    RunConfig::Format format;
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    void emit(std::ostream& out) const {
        switch (format) {
            case RunConfig::Format::table: {
                std::vector<std::size_t> width(columns.size());
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    width[c] = columns[c].size();
                    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
                }
                auto line = [&](const std::vector<std::string>& r) {
                    for (std::size_t c = 0; c < r.size(); ++c) {
                        out << r[c];
                        if (c + 1 < r.size())
                            out << std::string(width[c] - r[c].size() + 2, ' ');
                    }
                    out << "\n";
                };
                line(columns);
                for (const auto& r : rows) line(r);
                break;
            }
            case RunConfig::Format::csv: {
                for (std::size_t c = 0; c < columns.size(); ++c)
                    out << columns[c] << (c + 1 < columns.size() ? "," : "");
                out << "\n";
                for (const auto& r : rows) {
                    for (std::size_t c = 0; c < r.size(); ++c)
                        out << r[c] << (c + 1 < r.size() ? "," : "");
                    out << "\n";
                }
                break;
            }
            case RunConfig::Format::json: {
                nlohmann::json j;
                j["schema"] = 1;
                j["timestamp"] = timestamp_utc();
                j["command"] = command;
                j["columns"] = columns;
                j["rows"] = rows;
                out << j.dump(2) << "\n";
                break;
            }
        }
    }
};

struct OutStream {
    std::ostream& fallback;
    std::ofstream file;
    bool ok = true;

    OutStream(const RunConfig& cfg, std::ostream& fb) : fallback(fb) {
        if (cfg.out_path) {
            file.open(*cfg.out_path);
            ok = file.good();
        }
    }
    std::ostream& get() { return file.is_open() ? file : fallback; }
};

std::uint64_t sieve_bound_for(double t_needed) {
    double b = std::exp(std::abs(t_needed)) * 1.05 + 16.0;
    return static_cast<std::uint64_t>(std::min(b, 9.0e7));
}

line::ScrewLineContext make_context(const RunConfig& cfg, double t_needed) {
    analysis::QuadratureSpec spec;
    spec.radius = cfg.quad_radius;
    spec.rel_tol = cfg.rel_tol;
    return line::ScrewLineContext(
        screwfn::ScrewContext(arith::sieve_mangoldt(
            std::max<std::uint64_t>(1000, sieve_bound_for(t_needed)))),
        spec);
}

} // namespace

} // namespace detail

int cmd_g(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::format_double;
    if (cfg.t_values.empty()) {
        err << "error: --t LIST is required\n";
        return kExitUsage;
    }
    double t_needed = 0.0;
    for (double t : cfg.t_values) t_needed = std::max(t_needed, std::abs(t));
    if (t_needed > 18.0) {
        err << "error: |t| beyond the sieve range (log 1e8 ~ 18.4)\n";
        return kExitUsage;
    }
    util::set_thread_count(cfg.threads);
    auto ctx = detail::make_context(cfg, t_needed);

    detail::OutStream os(cfg, out);
    if (!os.ok) {
        err << "error: cannot open output path\n";
        return kExitIo;
    }
    detail::RowWriter w{cfg.format, "g", {"t", "g", "g_prime", "minus_2g"}, {}};
    for (double t : cfg.t_values) {
        double g = screwfn::g(ctx.screw, t);
        std::string gp;
        if (t == 0.0) {
            gp = format_double(0.0); // odd function, slope 0 at the origin
        } else {
            try {
                gp = format_double(screwfn::g_prime(ctx.screw, std::abs(t)) *
                                   (t > 0 ? 1.0 : -1.0));
            } catch (const JumpPointError&) {
                gp = "nan";
            }
        }
        w.add_row({format_double(t), format_double(g), gp, format_double(-2.0 * g)});
    }
    w.emit(os.get());
    return kExitOk;
}

int cmd_locate_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.t_max < 0.0 || cfg.t_max > 1e4) {
        err << "error: t_max must lie in [0, 1e4]\n";
        return kExitUsage;
    }
    util::set_thread_count(cfg.threads);
    auto table = zeros::locate_zeros(cfg.t_max, 1e-9);
    for (const auto& wmsg : table.warnings) err << "warning: " << wmsg << "\n";
    if (cfg.out_path) {
        try {
            zeros::save_zeros(table, *cfg.out_path);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kExitIo;
        }
        out << "wrote " << table.size() << " zeros to " << *cfg.out_path << "\n";
    } else {
        for (double g : table.ordinates) out << detail::format_double(g) << "\n";
    }
    return kExitOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::format_double;
    if (cfg.z_grid.empty()) {
        err << "error: --z LIST is required\n";
        return kExitUsage;
    }
    util::set_thread_count(cfg.threads);
    auto ctx = detail::make_context(cfg, cfg.sample_t);
    double zmax = 0.0;
    for (double z : cfg.z_grid) zmax = std::max(zmax, std::abs(z));
    auto table = detail::resolve_zeros(cfg, std::min(zmax, 1e4), err);

    detail::OutStream os(cfg, out);
    if (!os.ok) {
        err << "error: cannot open output path\n";
        return kExitIo;
    }
    detail::RowWriter w{cfg.format, "sample", {"z", "re", "im", "abs", "excluded"}, {}};
    for (double z : cfg.z_grid) {
        bool excluded = false;
        std::complex<double> v;
        try {
            v = line::frak_s(ctx, cfg.sample_t, z, &table);
        } catch (const ExclusionZoneError&) {
            excluded = true;
            v = line::frak_s(ctx, cfg.sample_t, z, nullptr);
        }
        w.add_row({format_double(z), format_double(v.real()), format_double(v.imag()),
                   format_double(std::abs(v)), excluded ? "1" : "0"});
    }
    w.emit(os.get());
    return kExitOk;
}

namespace {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    nlohmann::json extra;
};

void print_check(std::ostream& out, const CheckResult& c) {
    out << c.name << " [" << (c.pass ? "PASS" : "FAIL") << "] " << c.detail << "\n";
}

} // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::format_double;
    static const std::vector<std::string> known{"eq401", "eq402", "prop21", "eq302",
                                                "norm", "thm14", "cor16", "all"};
    if (std::find(known.begin(), known.end(), cfg.which) == known.end()) {
        err << "error: unknown verification '" << cfg.which
            << "' (expected eq401|eq402|prop21|eq302|norm|thm14|cor16|all)\n";
        return kExitUsage;
    }
    util::set_thread_count(cfg.threads);
    auto wants = [&](const std::string& n) { return cfg.which == "all" || cfg.which == n; };

    bool needs_zeros = wants("prop21") || wants("eq302") || wants("norm") ||
                       wants("thm14") || wants("cor16");
    auto ctx = detail::make_context(cfg, 4.5);
    zeros::ZeroTable table;
    if (needs_zeros) {
        double min_h = wants("norm") ? cfg.quad_radius * 1.01 + 20.0 : 2050.0;
        table = detail::resolve_zeros(cfg, std::max(min_h, 2050.0), err);
    }

    std::vector<CheckResult> results;

    if (wants("eq401")) {
        CheckResult c{"eq401", true, "", {}};
        double worst = 0.0;
        for (double t : {0.5, 1.0, 2.0, 4.0}) {
            double gap = std::abs(line::frak_p_zero_limit(ctx, t) + screwfn::g(ctx.screw, t));
            worst = std::max(worst, gap);
        }
        c.pass = worst <= 1e-6;
        c.detail = "max |lim frak_p - (-g)| = " + format_double(worst) + " (tol 1e-6)";
        results.push_back(c);
    }

    if (wants("eq402")) {
        CheckResult c{"eq402", true, "", {}};
        double worst = 0.0;
        for (double t : {1.0, 2.5}) {
            auto r = line::special_value_limit(ctx, t);
            double gap = std::abs(r.value + screwfn::g_prime(ctx.screw, t));
            worst = std::max(worst, gap);
            if (!r.residuals_monotone) c.detail += "non-monotone residuals; ";
        }
        c.pass = worst <= 1e-3;
        c.detail += "max |limit - (-g')| = " + format_double(worst) + " (tol 1e-3)";
        results.push_back(c);
    }

    if (wants("prop21")) {
        CheckResult c{"prop21", true, "", {}};
        auto t2000 = table.truncated_by_height(2000.0);
        auto t500 = table.truncated_by_height(500.0);
        double worst_ratio = 1e9;
        bool within = true;
        for (double t : {1.0, 2.0}) {
            for (std::complex<double> z : {std::complex<double>(0, 2), std::complex<double>(0, 3)}) {
                auto full = line::frak_p(ctx, t, z);
                auto s2 = zeros::p_t_zero_sum(t, z, t2000);
                auto s5 = zeros::p_t_zero_sum(t, z, t500);
                double gap2 = std::abs(full - s2.value);
                double gap5 = std::abs(full - s5.value);
                within = within && gap2 <= s2.tail.bound;
                worst_ratio = std::min(worst_ratio, gap5 / gap2);
            }
        }
        c.pass = within && worst_ratio >= 3.0;
        c.detail = "gaps within tail bounds: " + std::string(within ? "yes" : "no") +
                   ", min shrink 500->2000: " + format_double(worst_ratio) + " (need >= 3)";
        results.push_back(c);
    }

    if (wants("eq302")) {
        CheckResult c{"eq302", true, "", {}};
        auto t2000 = table.first_n(2000);
        double worst = 0.0;
        bool within = true;
        for (double t : {1.0, 2.0, 3.0}) {
            auto gs = zeros::g_zero_sum(t, t2000);
            double gap = std::abs(gs.value + screwfn::g(ctx.screw, t));
            within = within && gap <= gs.tail.bound;
            worst = std::max(worst, gap);
        }
        c.pass = within;
        c.detail = "max |zero-sum + g| = " + format_double(worst) + ", bounds held: " +
                   (within ? "yes" : "no");
        results.push_back(c);
    }

    if (wants("norm")) {
        CheckResult c{"norm", true, "", {}};
        analysis::QuadratureSpec spec = ctx.quad_defaults;
        spec.radius = cfg.quad_radius;
        for (double t : {1.0, 2.0}) {
            auto est = line::norm_sq_quad(ctx, t, spec, table);
            double target = -2.0 * screwfn::g(ctx.screw, t);
            double gap = std::abs(est.real_value() - target);
            double rel = gap / std::abs(target);
            bool ok = gap <= est.total_error() && rel <= 1e-2;
            if (!ok) {
                c.pass = false;
                if (est.tail_bound > 0.5 * est.total_error())
                    c.detail += "tail-bound-dominated at t=" + format_double(t) + "; ";
            }
            c.detail += "t=" + format_double(t) + ": rel=" + format_double(rel) + "; ";
        }
        c.detail += "(need rel <= 1e-2 and gap <= total_error)";
        results.push_back(c);
    }

    double verifier_radius = cfg.radius_given ? cfg.quad_radius : 400.0;

    if (wants("thm14")) {
        analysis::QuadratureSpec spec = ctx.quad_defaults;
        spec.radius = verifier_radius;
        analysis::TestFunction phi{2.0, 1.0, 1.0, analysis::TestFunction::Kind::bump_derivative};
        auto rep = verify::verify_theorem_1_4(ctx, phi, table, spec);
        CheckResult c{"thm14", rep.pass, "", rep.to_json()};
        for (const auto& p : rep.pairs)
            c.detail += p.a + "/" + p.b + " rel=" + format_double(p.rel_gap) + "; ";
        results.push_back(c);
    }

    if (wants("cor16")) {
        analysis::QuadratureSpec spec = ctx.quad_defaults;
        spec.radius = verifier_radius;
        analysis::TestFunction psi{1.5, 1.0, 1.0, analysis::TestFunction::Kind::bump};
        auto rep = verify::verify_corollary_1_6(ctx, psi, table, spec);
        CheckResult c{"cor16", rep.pass, "", rep.to_json()};
        for (const auto& p : rep.pairs)
            c.detail += p.a + "/" + p.b + " rel=" + format_double(p.rel_gap) + "; ";
        results.push_back(c);
    }

    detail::OutStream os(cfg, out);
    if (!os.ok) {
        err << "error: cannot open output path\n";
        return kExitIo;
    }
    bool all_pass = true;
    if (cfg.format == RunConfig::Format::json) {
        nlohmann::json j;
        j["schema"] = 1;
        j["timestamp"] = detail::timestamp_utc();
        j["command"] = "verify";
        j["checks"] = nlohmann::json::array();
        for (const auto& c : results) {
            all_pass = all_pass && c.pass;
            nlohmann::json jc{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
            if (!c.extra.is_null()) jc["report"] = c.extra;
            j["checks"].push_back(jc);
        }
        j["pass"] = all_pass;
        os.get() << j.dump(2) << "\n";
    } else {
        for (const auto& c : results) {
            all_pass = all_pass && c.pass;
            print_check(os.get(), c);
        }
        os.get() << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

} // namespace screw::cli
