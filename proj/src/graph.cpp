#include <hrg/graph.hpp>
#include <hrg/layers.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hrg {

Graph::Graph(PointSet points, const std::vector<std::vector<NodeId>>& adjacency)
    : points_(std::move(points))
{
    const std::size_t n = points_.size();
    if (adjacency.size() != n)
        throw std::invalid_argument("Graph: adjacency size does not match the point count");
    offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u)
        offsets_[u + 1] = offsets_[u] + adjacency[u].size();
    neighbors_.resize(offsets_[n]);
    for (std::size_t u = 0; u < n; ++u) {
        auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
        std::copy(adjacency[u].begin(), adjacency[u].end(), first);
        std::sort(first, first + static_cast<std::ptrdiff_t>(adjacency[u].size()));
        for (NodeId v : adjacency[u]) {
            if (v >= n)
                throw std::invalid_argument("Graph: neighbor id out of range");
            if (v > u)
                ++num_edges_;
        }
    }
}

Graph Graph::from_edges(PointSet points, std::span<const Edge> edges) {
    const std::size_t n = points.size();
    std::vector<std::vector<NodeId>> adjacency(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("Graph::from_edges: node id out of range");
        if (e.u == e.v)
            throw std::invalid_argument("Graph::from_edges: self-loop");
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return Graph(std::move(points), adjacency);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (NodeId u = 0; u < num_nodes(); ++u)
        for (NodeId v : neighbors(u))
            if (v > u)
                out.push_back({u, v});
    return out;
}

BandIndex::BandIndex(const PointSet& points) {
    const double R = points.params().R();
    const int count = static_cast<int>(std::floor(R)) + 1;
    bands_.resize(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        bands_[i - 1].index = i;
        bands_[i - 1].inner_radius = std::max(0.0, R - i);
    }
    band_of_.resize(points.size());
    for (NodeId u = 0; u < points.size(); ++u) {
        const int i = std::clamp(layer_index(points[u].r, R), 1, count);
        band_of_[u] = i;
        bands_[i - 1].ids.push_back(u);
    }
    for (auto& band : bands_) {
        std::stable_sort(band.ids.begin(), band.ids.end(),
                         [&](NodeId a, NodeId b) { return points[a].phi < points[b].phi; });
        band.angles.reserve(band.ids.size());
        for (NodeId u : band.ids)
            band.angles.push_back(points[u].phi);
    }
}

double theta_upper(int band_i, int band_j, double R) {
    const double gap = static_cast<double>(band_i + band_j) - R;
    if (gap >= -2.0)
        return PI;
    return std::min(PI, 2.0 * std::exp(0.5 * gap) * (1.0 + THETA_UPPER_K * std::exp(gap)));
}

namespace {

std::vector<EdgeKernel::Node> prepare_all(const PointSet& points) {
    std::vector<EdgeKernel::Node> nodes;
    nodes.reserve(points.size());
    for (const auto& p : points.points())
        nodes.push_back(EdgeKernel::prepare(p));
    return nodes;
}

// Relative widening of every candidate window, covering rounding in the
// window edges and in the layer assignment of nodes sitting on a boundary.
constexpr double WINDOW_SLACK = 1e-9;

}  // namespace

Graph build_naive(const PointSet& points) {
    const EdgeKernel kernel(points.params().R());
    const auto nodes = prepare_all(points);
    const std::size_t n = nodes.size();
    std::vector<std::vector<NodeId>> adjacency(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (kernel.connected(nodes[u], nodes[v])) {
                adjacency[u].push_back(v);
                adjacency[v].push_back(u);
            }
        }
    }
    return Graph(points, adjacency);
}

Graph build_banded(const PointSet& points) {
    const double R = points.params().R();
    const EdgeKernel kernel(R);
    const auto nodes = prepare_all(points);
    const BandIndex index(points);
    const int count = index.count();

    std::vector<double> window(static_cast<std::size_t>(count) * count);
    for (int i = 1; i <= count; ++i)
        for (int j = 1; j <= count; ++j)
            window[(i - 1) * count + (j - 1)] = theta_upper(i, j, R) * (1.0 + WINDOW_SLACK);

    std::vector<std::vector<NodeId>> adjacency(nodes.size());
    for (NodeId u = 0; u < nodes.size(); ++u) {
        const double phi = nodes[u].phi;
        const int i = index.band_of(u);
        auto& out = adjacency[u];
        auto scan = [&](const BandIndex::Band& band, std::size_t first, std::size_t last) {
            for (std::size_t k = first; k < last; ++k) {
                const NodeId v = band.ids[k];
                if (v != u && kernel.connected(nodes[u], nodes[v]))
                    out.push_back(v);
            }
        };
        for (const auto& band : index.bands()) {
            if (band.ids.empty())
                continue;
            const double w = window[(i - 1) * count + (band.index - 1)];
            const auto& angles = band.angles;
            if (w >= PI) {
                scan(band, 0, angles.size());
                continue;
            }
            auto position = [&](double a) {
                return static_cast<std::size_t>(std::lower_bound(angles.begin(), angles.end(), a) - angles.begin());
            };
            auto position_after = [&](double a) {
                return static_cast<std::size_t>(std::upper_bound(angles.begin(), angles.end(), a) - angles.begin());
            };
            const double lo = phi - w;
            const double hi = phi + w;
            if (lo < 0.0) {
                scan(band, position(lo + TWO_PI), angles.size());
                scan(band, 0, position_after(hi));
            } else if (hi >= TWO_PI) {
                scan(band, position(lo), angles.size());
                scan(band, 0, position_after(hi - TWO_PI));
            } else {
                scan(band, position(lo), position_after(hi));
            }
        }
    }
    return Graph(points, adjacency);
}

}  // namespace hrg
