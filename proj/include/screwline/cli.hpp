#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "screwline/verify.hpp"

namespace screw::cli {

// Exit codes: 0 pass, 1 verification fail, 2 usage/config error, 3 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
    enum class Format { table, csv, json };

    std::optional<std::string> zeros_path; // falls back to SCREWLINE_ZEROS, then embedded
    std::vector<double> t_values;
    double quad_radius = 2000.0;
    bool radius_given = false;
    double rel_tol = 1e-6;
    int threads = 4;
    Format format = Format::table;
    std::optional<std::string> out_path;
    long seed = 12345;

    // subcommand-specific
    double t_max = 100.0;          // locate-zeros
    std::string which;             // verify
    double sample_t = 1.0;         // sample
    std::vector<double> z_grid;    // sample
};

// prints g(t), g'(t), -2g(t) per t
int cmd_g(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// writes a zero-table file for (0, t_max]
int cmd_locate_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// which in {eq401, eq402, prop21, eq302, norm, thm14, cor16, all}
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// emits S_t(z) samples over z_grid with exclusion-zone flags
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

namespace detail {

// Zero table per config: explicit path, else $SCREWLINE_ZEROS, else the
// embedded 100-zero default (with a tail-bound warning on err).
zeros::ZeroTable resolve_zeros(const RunConfig& cfg, double min_height, std::ostream& err);

std::string format_double(double v);

} // namespace detail

} // namespace screw::cli
