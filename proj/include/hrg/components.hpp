#pragma once

#include <hrg/graph.hpp>

#include <cstdint>
#include <vector>

namespace hrg {

/// Union by size with path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns false if x and y were already joined.
    bool unite(std::size_t x, std::size_t y);
    std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Component label per node: the smallest node id in its component.
std::vector<NodeId> connected_components(const Graph& g);

struct ComponentInfo {
    NodeId label;
    std::size_t size;
    int diameter;  // -1 when diameters were not requested
};

struct ComponentReport {
    std::vector<NodeId> labels;
    /// Sorted by size descending, then label ascending. components[0] is the
    /// giant component when the graph is non-empty.
    std::vector<ComponentInfo> components;

    std::size_t giant_size = 0;
    NodeId giant_label = 0;
    std::size_t second_size = 0;
    int giant_diameter = 0;
    int max_component_diameter = 0;
    NodeId max_diameter_label = 0;

    std::vector<NodeId> members(NodeId label) const;
    std::vector<std::size_t> sizes() const;
};

/// Labels every component and, if requested, computes the exact diameter of
/// each one. The giant component is the largest, ties broken by smallest label.
ComponentReport analyze_components(const Graph& g, bool with_diameters = true);

}  // namespace hrg
