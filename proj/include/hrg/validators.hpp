#pragma once

#include <hrg/components.hpp>
#include <hrg/graph.hpp>

#include <cstdint>

namespace hrg {

inline constexpr double BETWEEN_TOLERANCE = 1e-9;

/// v lies between u and w: dphi(u, v) + dphi(v, w) = dphi(u, w) within tol.
bool is_between(const PolarPoint& u, const PolarPoint& v, const PolarPoint& w,
                double tol = BETWEEN_TOLERANCE);

enum class UnderpassVerdict {
    NotApplicable,  // {u, w} is not an edge, v is not between, or v is not lower
    Holds,
    Violated,
};

/**
 * Checks one triple against the underpass property: for an edge {u, w} and a
 * node v between them, r_v <= min(r_u, r_w) forces both edges to v, and
 * r_v <= r_u with r_v >= r_w forces {v, w} (symmetrically with u and w swapped).
 */
UnderpassVerdict check_underpass_triple(const Graph& g, NodeId u, NodeId v, NodeId w);

struct UnderpassResult {
    std::uint64_t triples = 0;     // triples that passed the between filter
    std::uint64_t asserted = 0;    // triples where a radius condition applied
    std::uint64_t violations = 0;
    std::uint64_t attempts = 0;    // edges drawn, including those with empty arcs
};

/// Draws random edges {u, w} and a random node v on the short arc between
/// them until `trials` triples are checked (or 100 trials' worth of draws
/// found no candidates). Violations must be zero on any threshold graph.
UnderpassResult check_underpass(const Graph& g, std::uint64_t trials, std::uint64_t seed);

/// Every pair of nodes with r <= R/2 is adjacent.
bool check_core_clique(const Graph& g);

/// Core nodes whose component label differs from the giant's.
std::size_t core_outside_giant(const Graph& g, const ComponentReport& components);

struct GraphInvariantReport {
    std::uint64_t asymmetric = 0;  // v in adj(u) but u not in adj(v)
    std::uint64_t self_loops = 0;
    std::uint64_t duplicates = 0;
    bool handshake = true;  // degree sum == 2m

    bool ok() const { return asymmetric == 0 && self_loops == 0 && duplicates == 0 && handshake; }
};

GraphInvariantReport check_graph_invariants(const Graph& g);

/// Edges for which edge_indicator is false; zero for any generated graph.
std::uint64_t count_non_geometric_edges(const Graph& g);

}  // namespace hrg
