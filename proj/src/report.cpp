#include <hrg/report.hpp>
#include <hrg/sampling.hpp>
#include <hrg/validators.hpp>

#include <cmath>
#include <string>

namespace hrg {

AnalysisResult analyze(const Graph& g, const AnalysisOptions& options) {
    AnalysisResult result;
    result.components = analyze_components(g, options.diameters);
    result.degrees = degree_stats(g);
    result.bands = band_diagnostics(g, options.inner_c);
    result.core_clique = check_core_clique(g);
    result.core_outside_giant = core_outside_giant(g, result.components);
    return result;
}

namespace {

nlohmann::json number_or_null(double x) {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

nlohmann::json diameter_or_null(int d) {
    return d >= 0 ? nlohmann::json(d) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json report_json(const Graph& g, const AnalysisResult& result) {
    using nlohmann::json;
    const auto& params = g.params();
    const auto& comps = result.components;
    const auto& deg = result.degrees;
    const auto& bands = result.bands;

    json out;
    out["schema"] = REPORT_SCHEMA;
    out["params"] = {
        {"n", params.n()},
        {"alpha", params.alpha()},
        {"C", params.C()},
        {"R", params.R()},
        {"seed", g.points().seed()},
        {"mode", std::string(to_string(g.points().mode()))},
        {"in_regime", params.in_regime()},
    };
    out["graph"] = {{"nodes", g.num_nodes()}, {"edges", g.num_edges()}};
    out["components"] = {
        {"count", comps.components.size()},
        {"sizes", comps.sizes()},
        {"giant_label", comps.giant_label},
        {"giant_size", comps.giant_size},
        {"second_size", comps.second_size},
        {"giant_diameter", diameter_or_null(comps.components.empty() ? 0 : comps.giant_diameter)},
        {"max_component_diameter", diameter_or_null(comps.components.empty() ? 0 : comps.max_component_diameter)},
        {"max_diameter_label", comps.max_diameter_label},
    };
    out["degrees"] = {
        {"histogram", deg.histogram},
        {"mean", deg.mean},
        {"beta_hat", number_or_null(deg.beta_hat)},
        {"x_min", deg.x_min},
        {"tail_samples", deg.tail_samples},
        {"reliable", deg.reliable},
        {"beta_theory", deg.beta_theory},
        {"mean_theory", number_or_null(deg.mean_theory)},
    };
    out["bands"] = {
        {"inner_c", bands.inner_c},
        {"inner_radius", number_or_null(bands.inner_radius)},
        {"layer_counts", bands.layer_counts},
        {"inner_count", bands.inner_count},
        {"outer_count", bands.outer_count},
        {"max_empty_sector_run", bands.max_empty_sector_run},
        {"window_k", bands.window_k},
        {"max_window_nodes", bands.max_window_nodes},
        {"inner_band_hops",
         {
             {"inner_nodes", bands.hops.inner_nodes},
             {"core_nodes", bands.hops.core_nodes},
             {"max_hops", bands.hops.max_hops},
             {"pair_bound", bands.hops.pair_bound},
             {"unreachable", bands.hops.unreachable},
         }},
    };
    out["checks"] = {
        {"core_clique", result.core_clique},
        {"core_outside_giant", result.core_outside_giant},
    };
    return out;
}

}  // namespace hrg
