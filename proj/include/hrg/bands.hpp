#pragma once

#include <hrg/graph.hpp>
#include <hrg/layers.hpp>

#include <cstdint>
#include <vector>

namespace hrg {

inline constexpr double DEFAULT_INNER_C = 1.0;

/**
 * Longest circular run of consecutive empty sectors, when [0, 2pi) is cut
 * into params.n() equal sectors and a sector counts as occupied iff it holds
 * an inner-band node. Returns n when the inner band is empty.
 */
std::uint64_t max_empty_sector_run(const PointSet& points, const ModelParams& params, double c);

/// Default window for max_window_nodes: ceil((ln n)^(1 / (1 - alpha))),
/// clamped to [1, n]; n for alpha >= 1.
std::uint64_t default_sector_window(const ModelParams& params);

/// Most nodes (of any band) inside k consecutive sectors out of params.n().
std::uint64_t max_window_nodes(const PointSet& points, const ModelParams& params, std::uint64_t k);

struct InnerBandHops {
    std::size_t inner_nodes = 0;
    std::size_t core_nodes = 0;
    /// Largest BFS distance from the core over reachable inner-band nodes;
    /// 0 when every inner-band node is itself in the core.
    int max_hops = 0;
    /// 2 max_hops + 1: any two inner-band nodes meet through the core clique.
    int pair_bound = 1;
    /// Inner-band nodes with no path to the core. A w.h.p. exception, reported
    /// rather than treated as an error.
    std::size_t unreachable = 0;
};

InnerBandHops inner_band_hops(const Graph& g, double c);

struct BandDiagnostics {
    double inner_c = DEFAULT_INNER_C;
    double inner_radius = 0.0;
    std::vector<int> layer;                 // per node
    std::vector<std::uint8_t> inner;        // per node, 1 = inner band
    std::vector<std::size_t> layer_counts;  // layer_counts[i - 1] = |L_i|
    std::size_t inner_count = 0;
    std::size_t outer_count = 0;
    std::uint64_t max_empty_sector_run = 0;
    std::uint64_t window_k = 0;
    std::uint64_t max_window_nodes = 0;
    InnerBandHops hops;
};

BandDiagnostics band_diagnostics(const Graph& g, double c = DEFAULT_INNER_C);

}  // namespace hrg
