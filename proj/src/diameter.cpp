#include <hrg/diameter.hpp>

#include <algorithm>
#include <stdexcept>

namespace hrg {

BfsWorkspace::BfsWorkspace(std::size_t n)
    : dist_(n, -1)
{
    order_.reserve(n);
}

void BfsWorkspace::reset() {
    for (NodeId u : order_)
        dist_[u] = -1;
    order_.clear();
}

int BfsWorkspace::run(const Graph& g, NodeId source) {
    return run(g, std::span<const NodeId>(&source, 1));
}

int BfsWorkspace::run(const Graph& g, std::span<const NodeId> sources) {
    reset();
    for (NodeId s : sources) {
        if (dist_[s] < 0) {
            dist_[s] = 0;
            order_.push_back(s);
        }
    }
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const NodeId u = order_[head];
        const int next = dist_[u] + 1;
        for (NodeId v : g.neighbors(u)) {
            if (dist_[v] < 0) {
                dist_[v] = next;
                order_.push_back(v);
            }
        }
    }
    return order_.empty() ? 0 : dist_[order_.back()];
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
    BfsWorkspace ws(g.num_nodes());
    ws.run(g, source);
    std::vector<int> out(g.num_nodes(), -1);
    for (NodeId u : ws.visited())
        out[u] = ws.distance(u);
    return out;
}

namespace {

void require_component(const Graph& g, std::span<const NodeId> component, const BfsWorkspace& ws) {
    bool ok = ws.visited().size() == component.size();
    for (std::size_t i = 0; ok && i < component.size(); ++i)
        ok = component[i] < g.num_nodes() && ws.distance(component[i]) >= 0;
    if (!ok)
        throw std::invalid_argument("exact_diameter: node set is not a connected component");
}

}  // namespace

int exact_diameter(const Graph& g, std::span<const NodeId> component) {
    if (component.empty())
        throw std::invalid_argument("exact_diameter: empty component");
    for (NodeId u : component)
        if (u >= g.num_nodes())
            throw std::invalid_argument("exact_diameter: node id out of range");
    if (component.size() == 1) {
        if (g.degree(component[0]) != 0)
            throw std::invalid_argument("exact_diameter: node set is not a connected component");
        return 0;
    }

    const NodeId start = *std::max_element(component.begin(), component.end(), [&](NodeId a, NodeId b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b);
    });

    BfsWorkspace ws(g.num_nodes());
    const int ecc_start = ws.run(g, start);
    require_component(g, component, ws);

    // BFS levels around the start node, outermost last
    std::vector<std::vector<NodeId>> levels(static_cast<std::size_t>(ecc_start) + 1);
    for (NodeId u : ws.visited())
        levels[static_cast<std::size_t>(ws.distance(u))].push_back(u);

    // double sweep: the node farthest from start is usually peripheral
    int lower = std::max(ecc_start, ws.run(g, levels.back().front()));

    for (int level = ecc_start; level > 0; --level) {
        const int upper = 2 * level;
        if (lower >= upper)
            break;
        int level_max = 0;
        for (NodeId u : levels[static_cast<std::size_t>(level)])
            level_max = std::max(level_max, ws.run(g, u));
        lower = std::max(lower, level_max);
        // every pair inside the remaining levels is within 2 (level - 1)
        if (lower > 2 * (level - 1))
            break;
    }
    return lower;
}

int diameter_all_pairs(const Graph& g, std::span<const NodeId> component) {
    if (component.empty())
        throw std::invalid_argument("diameter_all_pairs: empty component");
    BfsWorkspace ws(g.num_nodes());
    int best = 0;
    for (NodeId u : component) {
        const int ecc = ws.run(g, u);
        if (ws.visited().size() != component.size())
            throw std::invalid_argument("diameter_all_pairs: node set is not a connected component");
        best = std::max(best, ecc);
    }
    return best;
}

}  // namespace hrg
