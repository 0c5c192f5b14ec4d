#pragma once

#include <hrg/graph.hpp>

#include <vector>

namespace hrg {

struct RouteOutcome {
    bool success = false;
    std::vector<NodeId> path;  // starts at the source, ends at the target or the local minimum

    std::size_t hops() const { return path.empty() ? 0 : path.size() - 1; }
};

/// Greedy geometric routing: always forward to the neighbor hyperbolically
/// closest to t (ties to the smaller id); stop at t or when no neighbor is
/// strictly closer than the current node.
RouteOutcome greedy_route(const Graph& g, NodeId s, NodeId t);

}  // namespace hrg
