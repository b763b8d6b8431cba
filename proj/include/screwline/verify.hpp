#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "screwline/screwline.hpp"

namespace screw::verify {

using analysis::QuadratureSpec;
using analysis::TestFunction;
using line::ScrewLineContext;
using zeros::ZeroTable;

// One evaluation route for an identity, with its error budget.
struct PathValue {
    std::string label;
    double value = 0.0;
    double budget = 0.0;
};

struct PairGap {
    std::string a, b;
    double gap = 0.0;
    double combined_budget = 0.0;
    double rel_gap = 0.0;
    bool within_budget = false;
    bool within_rel = false;
};

struct VerifyReport {
    std::string name;
    std::vector<PathValue> paths;
    std::vector<PairGap> pairs;
    std::vector<std::string> diagnostics;
    bool pass = false;

    nlohmann::json to_json() const;
};

// Pairwise gaps vs combined budgets plus the relative threshold; pass
// requires every pair to satisfy both.
VerifyReport make_report(std::string name, std::vector<PathValue> paths,
                         double rel_threshold = 1e-2);

// ||P_hat_phi||^2 (quadrature) vs <phi,phi>_{G_g} (kernel double quadrature)
// vs the spectral sum over zeros: three disjoint code paths for the same
// number.  phi must be zero-mean (a bump derivative).
VerifyReport verify_theorem_1_4(const ScrewLineContext& ctx, const TestFunction& phi,
                                const ZeroTable& table, const QuadratureSpec& spec);

// ||P_hat_{D psi}||^2 (quadrature) vs <D psi, D psi>_{G_g} (kernel) vs the
// Weil form of psi (spectral).
VerifyReport verify_corollary_1_6(const ScrewLineContext& ctx, const TestFunction& psi,
                                  const ZeroTable& table, const QuadratureSpec& spec);

} // namespace screw::verify
