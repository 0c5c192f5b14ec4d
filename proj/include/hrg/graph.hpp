#pragma once

#include <hrg/sampling.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hrg {

using NodeId = std::uint32_t;

/// Undirected edge in canonical orientation u < v.
struct Edge {
    NodeId u;
    NodeId v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable undirected graph over a PointSet, stored as compressed sorted
 * adjacency lists.
 *
 * The adjacency constructor takes lists as given (after sorting each one) and
 * does not force symmetry; invariant checks live in validators.hpp so a
 * corrupted graph can be represented and detected. from_edges() always yields
 * a symmetric simple graph.
 */
class Graph {
public:
    Graph(PointSet points, const std::vector<std::vector<NodeId>>& adjacency);

    /// Throws std::invalid_argument on out-of-range ids or self-loops;
    /// duplicate edges collapse.
    static Graph from_edges(PointSet points, std::span<const Edge> edges);

    const PointSet& points() const { return points_; }
    const ModelParams& params() const { return points_.params(); }

    std::size_t num_nodes() const { return offsets_.size() - 1; }
    /// Entries v > u in the list of u, which equals half the degree sum
    /// whenever the adjacency is symmetric.
    std::size_t num_edges() const { return num_edges_; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Canonical (u < v) edges read from the lists of the lower endpoint,
    /// sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
    }

private:
    PointSet points_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbors_;
    std::size_t num_edges_ = 0;
};

/**
 * Nodes grouped by unit-thickness layer (band i = layer i, radii in
 * (R - i, R - i + 1]) and sorted by angle within each band.
 */
class BandIndex {
public:
    explicit BandIndex(const PointSet& points);

    struct Band {
        int index;
        double inner_radius;
        std::vector<NodeId> ids;     // sorted by angle
        std::vector<double> angles;  // parallel to ids
    };

    /// Bands 1..count(); band i is bands()[i - 1], possibly empty.
    const std::vector<Band>& bands() const { return bands_; }
    int count() const { return static_cast<int>(bands_.size()); }
    int band_of(NodeId u) const { return band_of_[u]; }

private:
    std::vector<Band> bands_;
    std::vector<int> band_of_;
};

/// Constant in theta_upper's correction term. The relative excess of the
/// exact angle over 2 exp((R - r - y) / 2) stays below ~0.18 exp(R - r - y)
/// once r + y >= R + 2, so 1 leaves a wide margin.
inline constexpr double THETA_UPPER_K = 1.0;

/// Upper bound on theta_exact(r, y, R) over r in band i, y in band j.
double theta_upper(int band_i, int band_j, double R);

/// All-pairs edge test. Quadratic; the reference builder.
Graph build_naive(const PointSet& points);

/// Same edge set as build_naive; each node only tests nodes of band j inside
/// the angular window +-theta_upper(i, j), located by binary search.
Graph build_banded(const PointSet& points);

}  // namespace hrg
