// screwline: verification CLI for the screw function g(t), the screw line
// S_t(z), and the explicit-formula identities connecting them.

#include <iostream>

#include <CLI11.hpp>

#include "screwline/cli.hpp"

namespace {

using screw::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--zeros", cfg.zeros_path,
                    "zero-table file (one ascending ordinate per line, '#' comments); "
                    "falls back to $SCREWLINE_ZEROS, then the embedded 100-zero table");
    cmd->add_option("--radius", cfg.quad_radius, "truncation radius T for L2 integrals")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.rel_tol, "relative quadrature tolerance")
        ->check(CLI::Range(1e-12, 0.1));
    cmd->add_option("--threads", cfg.threads, "worker pool size")->check(CLI::Range(1, 256));
    std::map<std::string, RunConfig::Format> fmt{{"table", RunConfig::Format::table},
                                                 {"csv", RunConfig::Format::csv},
                                                 {"json", RunConfig::Format::json}};
    cmd->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt, CLI::ignore_case));
    cmd->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
    cmd->add_option("--seed", cfg.seed, "seed for randomized property sweeps");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "screwline: numerical screw-function/screw-line toolkit.\n"
        "CSV columns: 'g' emits t,g,g_prime,minus_2g; 'sample' emits "
        "z,re,im,abs,excluded (excluded=1 flags z within 1e-6 of a table zero)."};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* g_cmd = app.add_subcommand("g", "evaluate g(t), g'(t) and -2g(t)");
    g_cmd->add_option("--t", cfg.t_values, "t values (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    add_common(g_cmd, cfg);

    auto* loc_cmd = app.add_subcommand("locate-zeros", "locate zeta zeros up to a height");
    loc_cmd->add_option("--t-max", cfg.t_max, "scan height (<= 1e4)")->required();
    add_common(loc_cmd, cfg);

    auto* ver_cmd = app.add_subcommand(
        "verify", "run identity verifications (exit 0 iff all pass)");
    ver_cmd->add_option("which", cfg.which,
                        "eq401|eq402|prop21|eq302|norm|thm14|cor16|all")
        ->required();
    add_common(ver_cmd, cfg);

    auto* smp_cmd = app.add_subcommand("sample", "emit S_t(z) over a z grid");
    smp_cmd->add_option("--t", cfg.sample_t, "the t parameter")->required();
    smp_cmd->add_option("--z", cfg.z_grid, "z values (comma-separated)")
        ->required()
        ->delimiter(',');
    add_common(smp_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return screw::cli::kExitUsage;
    }
    cfg.radius_given = ver_cmd->count("--radius") > 0;

    try {
        if (g_cmd->parsed()) return screw::cli::cmd_g(cfg, std::cout, std::cerr);
        if (loc_cmd->parsed()) return screw::cli::cmd_locate_zeros(cfg, std::cout, std::cerr);
        if (ver_cmd->parsed()) return screw::cli::cmd_verify(cfg, std::cout, std::cerr);
        if (smp_cmd->parsed()) return screw::cli::cmd_sample(cfg, std::cout, std::cerr);
    } catch (const screw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return screw::cli::kExitIo;
    } catch (const screw::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return screw::cli::kExitUsage;
    } catch (const screw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return screw::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return screw::cli::kExitUsage;
    }
    return screw::cli::kExitUsage;
}
