#pragma once

#include <hrg/graph.hpp>

#include <span>
#include <vector>

namespace hrg {

/// Reusable BFS buffers; only the visited part is reset between runs, so
/// repeated sweeps inside one small component stay proportional to its size.
class BfsWorkspace {
public:
    explicit BfsWorkspace(std::size_t n);

    /// Runs a BFS from `source`; returns the eccentricity within its component.
    int run(const Graph& g, NodeId source);
    /// Multi-source variant; distance 0 for every source.
    int run(const Graph& g, std::span<const NodeId> sources);

    int distance(NodeId u) const { return dist_[u]; }
    /// Visited nodes in BFS order (non-decreasing distance).
    const std::vector<NodeId>& visited() const { return order_; }
    NodeId farthest() const { return order_.back(); }

private:
    void reset();

    std::vector<int> dist_;
    std::vector<NodeId> order_;
};

std::vector<int> bfs_distances(const Graph& g, NodeId source);

/**
 * Exact diameter of a connected node set via iFUB: a double sweep for the
 * initial lower bound, then the BFS levels from the highest-degree node are
 * processed from the outside in until the remaining levels cannot beat the
 * bound. Throws std::invalid_argument if `component` is empty or not
 * connected in g.
 */
int exact_diameter(const Graph& g, std::span<const NodeId> component);

/// Maximum over all-pairs BFS; the reference for exact_diameter.
int diameter_all_pairs(const Graph& g, std::span<const NodeId> component);

}  // namespace hrg
