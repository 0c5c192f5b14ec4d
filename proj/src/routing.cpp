#include <hrg/routing.hpp>

#include <stdexcept>

namespace hrg {

RouteOutcome greedy_route(const Graph& g, NodeId s, NodeId t) {
    if (s >= g.num_nodes() || t >= g.num_nodes())
        throw std::invalid_argument("greedy_route: node id out of range");
    const auto& ps = g.points();
    // cosh of the distance orders nodes like the distance itself
    auto closeness = [&](NodeId x) { return x == t ? 0.0 : cosh_distance(ps[x], ps[t]); };

    RouteOutcome out;
    out.path.push_back(s);
    NodeId current = s;
    double current_d = closeness(s);
    while (current != t) {
        NodeId best = current;
        double best_d = current_d;
        // neighbors are sorted, so a strict comparison keeps the smallest id on ties
        for (NodeId v : g.neighbors(current)) {
            const double d = closeness(v);
            if (d < best_d) {
                best = v;
                best_d = d;
            }
        }
        if (best == current)
            return out;
        current = best;
        current_d = best_d;
        out.path.push_back(current);
    }
    out.success = true;
    return out;
}

}  // namespace hrg
