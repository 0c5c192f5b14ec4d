#pragma once

#include <hrg/bands.hpp>
#include <hrg/components.hpp>
#include <hrg/degree.hpp>
#include <hrg/graph.hpp>

#include <json.hpp>

namespace hrg {

inline constexpr int REPORT_SCHEMA = 1;

struct AnalysisOptions {
    double inner_c = DEFAULT_INNER_C;
    bool diameters = true;
};

struct AnalysisResult {
    ComponentReport components;
    DegreeStats degrees;
    BandDiagnostics bands;
    bool core_clique = true;
    std::size_t core_outside_giant = 0;
};

AnalysisResult analyze(const Graph& g, const AnalysisOptions& options = {});

/**
 * JSON report with frozen keys:
 *
 *   schema, params{n, alpha, C, R, seed, mode, in_regime},
 *   graph{nodes, edges},
 *   components{count, sizes, giant_label, giant_size, second_size,
 *              giant_diameter, max_component_diameter, max_diameter_label},
 *   degrees{histogram, mean, beta_hat, x_min, tail_samples, reliable,
 *           beta_theory, mean_theory},
 *   bands{inner_c, inner_radius, layer_counts, inner_count, outer_count,
 *         max_empty_sector_run, window_k, max_window_nodes,
 *         inner_band_hops{inner_nodes, core_nodes, max_hops, pair_bound, unreachable}},
 *   checks{core_clique, core_outside_giant}
 *
 * Diameters are null when they were not computed; NaN estimates are null.
 */
nlohmann::json report_json(const Graph& g, const AnalysisResult& result);

}  // namespace hrg
