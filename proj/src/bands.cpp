#include <hrg/bands.hpp>
#include <hrg/diameter.hpp>

#include <algorithm>
#include <cmath>

namespace hrg {

namespace {

std::uint64_t sector_of(double phi, std::uint64_t sectors) {
    const auto s = static_cast<std::uint64_t>(phi / TWO_PI * static_cast<double>(sectors));
    return std::min(s, sectors - 1);
}

}  // namespace

std::uint64_t max_empty_sector_run(const PointSet& points, const ModelParams& params, double c) {
    const std::uint64_t sectors = params.n();
    std::vector<std::uint8_t> occupied(sectors, 0);
    bool any = false;
    for (const auto& p : points.points()) {
        if (inner_band(p, params, c)) {
            occupied[sector_of(p.phi, sectors)] = 1;
            any = true;
        }
    }
    if (!any)
        return sectors;
    // start right after an occupied sector so the circular run is contiguous
    std::uint64_t anchor = 0;
    while (!occupied[anchor])
        ++anchor;
    std::uint64_t best = 0, run = 0;
    for (std::uint64_t step = 1; step <= sectors; ++step) {
        if (occupied[(anchor + step) % sectors]) {
            run = 0;
        } else {
            best = std::max(best, ++run);
        }
    }
    return best;
}

std::uint64_t default_sector_window(const ModelParams& params) {
    const std::uint64_t n = params.n();
    if (params.alpha() >= 1.0)
        return n;
    const double k = std::ceil(std::pow(std::log(static_cast<double>(n)), 1.0 / (1.0 - params.alpha())));
    if (!(k >= 1.0))
        return 1;
    return k >= static_cast<double>(n) ? n : static_cast<std::uint64_t>(k);
}

std::uint64_t max_window_nodes(const PointSet& points, const ModelParams& params, std::uint64_t k) {
    const std::uint64_t sectors = params.n();
    k = std::clamp<std::uint64_t>(k, 1, sectors);
    std::vector<std::uint64_t> count(sectors, 0);
    for (const auto& p : points.points())
        ++count[sector_of(p.phi, sectors)];
    std::uint64_t window = 0;
    for (std::uint64_t s = 0; s < k; ++s)
        window += count[s];
    std::uint64_t best = window;
    for (std::uint64_t s = 1; s < sectors && k < sectors; ++s) {
        window += count[(s + k - 1) % sectors];
        window -= count[s - 1];
        best = std::max(best, window);
    }
    return best;
}

InnerBandHops inner_band_hops(const Graph& g, double c) {
    const auto& ps = g.points();
    const auto& params = g.params();
    InnerBandHops out;
    std::vector<NodeId> core;
    for (NodeId u = 0; u < ps.size(); ++u) {
        if (in_core(ps[u], params))
            core.push_back(u);
    }
    out.core_nodes = core.size();
    BfsWorkspace ws(g.num_nodes());
    if (!core.empty())
        ws.run(g, core);
    for (NodeId u = 0; u < ps.size(); ++u) {
        if (!inner_band(ps[u], params, c))
            continue;
        ++out.inner_nodes;
        const int d = core.empty() ? -1 : ws.distance(u);
        if (d < 0)
            ++out.unreachable;
        else
            out.max_hops = std::max(out.max_hops, d);
    }
    out.pair_bound = 2 * out.max_hops + 1;
    return out;
}

BandDiagnostics band_diagnostics(const Graph& g, double c) {
    const auto& ps = g.points();
    const auto& params = g.params();
    BandDiagnostics d;
    d.inner_c = c;
    d.inner_radius = inner_band_radius(params, c);
    d.layer.resize(ps.size());
    d.inner.resize(ps.size());
    d.layer_counts.assign(static_cast<std::size_t>(std::floor(params.R())) + 1, 0);
    for (NodeId u = 0; u < ps.size(); ++u) {
        d.layer[u] = layer_index(ps[u], params);
        ++d.layer_counts[static_cast<std::size_t>(d.layer[u] - 1)];
        d.inner[u] = inner_band(ps[u], params, c) ? 1 : 0;
        if (d.inner[u])
            ++d.inner_count;
    }
    d.outer_count = ps.size() - d.inner_count;
    d.max_empty_sector_run = max_empty_sector_run(ps, params, c);
    d.window_k = default_sector_window(params);
    d.max_window_nodes = max_window_nodes(ps, params, d.window_k);
    d.hops = inner_band_hops(g, c);
    return d;
}

}  // namespace hrg
