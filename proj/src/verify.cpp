#include "screwline/verify.hpp"

#include <cmath>

namespace screw::verify {

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["pass"] = pass;
    j["paths"] = nlohmann::json::array();
    for (const auto& p : paths)
        j["paths"].push_back({{"label", p.label}, {"value", p.value}, {"budget", p.budget}});
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : pairs)
        j["pairs"].push_back({{"a", p.a},
                              {"b", p.b},
                              {"gap", p.gap},
                              {"combined_budget", p.combined_budget},
                              {"rel_gap", p.rel_gap},
                              {"within_budget", p.within_budget},
                              {"within_rel", p.within_rel}});
    j["diagnostics"] = diagnostics;
    return j;
}

VerifyReport make_report(std::string name, std::vector<PathValue> paths,
                         double rel_threshold) {
    VerifyReport rep;
    rep.name = std::move(name);
    rep.paths = std::move(paths);
    rep.pass = true;
    for (std::size_t i = 0; i < rep.paths.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.paths.size(); ++j) {
            const auto& a = rep.paths[i];
            const auto& b = rep.paths[j];
            PairGap pg;
            pg.a = a.label;
            pg.b = b.label;
            pg.gap = std::abs(a.value - b.value);
            pg.combined_budget = a.budget + b.budget;
            double scale = 0.5 * (std::abs(a.value) + std::abs(b.value));
            pg.rel_gap = scale > 0.0 ? pg.gap / scale : 0.0;
            pg.within_budget = pg.gap <= pg.combined_budget;
            pg.within_rel = pg.rel_gap <= rel_threshold;
            if (!pg.within_budget || !pg.within_rel) rep.pass = false;
            rep.pairs.push_back(pg);
        }
    }
    return rep;
}

VerifyReport verify_theorem_1_4(const ScrewLineContext& ctx, const TestFunction& phi,
                                const ZeroTable& table, const QuadratureSpec& spec) {
    if (phi.kind != TestFunction::Kind::bump_derivative)
        throw DomainError("verify_theorem_1_4: phi must be zero-mean (a bump derivative)");

    auto norm = line::norm_sq_p_hat(ctx, phi, spec, table);
    auto kernel = screwfn::herm_form_gg(ctx.screw, phi, phi, 2e-5);
    auto spectral = zeros::gg_form_zero_sum(analysis::fourier_evaluator(phi), table);

    auto rep = make_report("thm14", {{"norm_quad", norm.real_value(), norm.total_error()},
                                     {"kernel_quad", kernel.real_value(), kernel.total_error()},
                                     {"spectral", spectral.value, spectral.tail.bound}});
    if (!rep.pass && norm.tail_bound > 0.5 * norm.total_error())
        rep.diagnostics.push_back("tail bound dominates the norm_quad error budget");
    return rep;
}

VerifyReport verify_corollary_1_6(const ScrewLineContext& ctx, const TestFunction& psi,
                                  const ZeroTable& table, const QuadratureSpec& spec) {
    if (psi.kind != TestFunction::Kind::bump)
        throw DomainError("verify_corollary_1_6: psi must be a bump");
    TestFunction dpsi = psi.derivative();

    auto norm = line::norm_sq_p_hat(ctx, dpsi, spec, table);
    auto kernel = screwfn::herm_form_gg(ctx.screw, dpsi, dpsi, 2e-5);
    auto weil = zeros::weil_form(analysis::fourier_evaluator(psi), table);

    auto rep = make_report("cor16", {{"norm_quad", norm.real_value(), norm.total_error()},
                                     {"kernel_quad", kernel.real_value(), kernel.total_error()},
                                     {"spectral_weil", weil.value, weil.tail.bound}});
    if (!rep.pass && norm.tail_bound > 0.5 * norm.total_error())
        rep.diagnostics.push_back("tail bound dominates the norm_quad error budget");
    return rep;
}

} // namespace screw::verify
