#include <hrg/layers.hpp>
#include <hrg/random.hpp>
#include <hrg/validators.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hrg {

bool is_between(const PolarPoint& u, const PolarPoint& v, const PolarPoint& w, double tol) {
    return std::fabs(delta_phi(u, v) + delta_phi(v, w) - delta_phi(u, w)) <= tol;
}

UnderpassVerdict check_underpass_triple(const Graph& g, NodeId u, NodeId v, NodeId w) {
    if (u == v || v == w || u == w || !g.has_edge(u, w))
        return UnderpassVerdict::NotApplicable;
    const auto& ps = g.points();
    if (!is_between(ps[u], ps[v], ps[w]))
        return UnderpassVerdict::NotApplicable;
    const double ru = ps[u].r, rv = ps[v].r, rw = ps[w].r;
    bool holds;
    if (rv <= ru && rv <= rw)
        holds = g.has_edge(v, u) && g.has_edge(v, w);
    else if (rv <= ru)
        holds = g.has_edge(v, w);
    else if (rv <= rw)
        holds = g.has_edge(v, u);
    else
        return UnderpassVerdict::NotApplicable;
    return holds ? UnderpassVerdict::Holds : UnderpassVerdict::Violated;
}

UnderpassResult check_underpass(const Graph& g, std::uint64_t trials, std::uint64_t seed) {
    UnderpassResult out;
    const auto edges = g.edges();
    const std::size_t n = g.num_nodes();
    if (edges.empty() || n < 3 || trials == 0)
        return out;
    const auto& ps = g.points();

    std::vector<NodeId> by_angle(n);
    std::iota(by_angle.begin(), by_angle.end(), NodeId{0});
    std::stable_sort(by_angle.begin(), by_angle.end(), [&](NodeId a, NodeId b) { return ps[a].phi < ps[b].phi; });
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k)
        position[by_angle[k]] = k;

    Rng rng(seed);
    const std::uint64_t max_attempts = 100 * trials;
    while (out.triples < trials && out.attempts < max_attempts) {
        ++out.attempts;
        const Edge e = edges[rng.uniform_index(edges.size())];
        // orient so that the short arc runs counter-clockwise from `from` to `to`
        NodeId from = e.u, to = e.v;
        double ccw = ps[to].phi - ps[from].phi;
        if (ccw < 0.0)
            ccw += TWO_PI;
        if (ccw > PI)
            std::swap(from, to);
        const std::size_t start = position[from], stop = position[to];
        const std::size_t inside = (stop + n - start - 1) % n;
        if (inside == 0)
            continue;
        const NodeId v = by_angle[(start + 1 + rng.uniform_index(inside)) % n];
        if (v == e.u || v == e.v || !is_between(ps[e.u], ps[v], ps[e.v]))
            continue;
        ++out.triples;
        const auto verdict = check_underpass_triple(g, e.u, v, e.v);
        if (verdict != UnderpassVerdict::NotApplicable)
            ++out.asserted;
        if (verdict == UnderpassVerdict::Violated)
            ++out.violations;
    }
    return out;
}

bool check_core_clique(const Graph& g) {
    const auto& ps = g.points();
    std::vector<NodeId> core;
    for (NodeId u = 0; u < ps.size(); ++u)
        if (in_core(ps[u], g.params()))
            core.push_back(u);
    for (std::size_t a = 0; a < core.size(); ++a)
        for (std::size_t b = a + 1; b < core.size(); ++b)
            if (!g.has_edge(core[a], core[b]) || !g.has_edge(core[b], core[a]))
                return false;
    return true;
}

std::size_t core_outside_giant(const Graph& g, const ComponentReport& components) {
    const auto& ps = g.points();
    std::size_t outside = 0;
    for (NodeId u = 0; u < ps.size(); ++u)
        if (in_core(ps[u], g.params()) && components.labels[u] != components.giant_label)
            ++outside;
    return outside;
}

GraphInvariantReport check_graph_invariants(const Graph& g) {
    GraphInvariantReport out;
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const auto adj = g.neighbors(u);
        degree_sum += adj.size();
        for (std::size_t k = 0; k < adj.size(); ++k) {
            if (adj[k] == u)
                ++out.self_loops;
            if (k > 0 && adj[k] == adj[k - 1])
                ++out.duplicates;
            if (!g.has_edge(adj[k], u))
                ++out.asymmetric;
        }
    }
    out.handshake = degree_sum == 2 * g.num_edges();
    return out;
}

std::uint64_t count_non_geometric_edges(const Graph& g) {
    const auto& ps = g.points();
    const double R = g.params().R();
    std::uint64_t bad = 0;
    for (const Edge& e : g.edges())
        if (!edge_indicator(ps[e.u], ps[e.v], R))
            ++bad;
    return bad;
}

}  // namespace hrg
