#include <hrg/components.hpp>
#include <hrg/diameter.hpp>

#include <algorithm>
#include <numeric>

namespace hrg {

DisjointSets::DisjointSets(std::size_t n)
    : parent_(n)
    , size_(n, 1)
{
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y)
        return false;
    if (size_[x] < size_[y])
        std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
}

std::vector<NodeId> connected_components(const Graph& g) {
    const std::size_t n = g.num_nodes();
    DisjointSets sets(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.neighbors(u))
            if (v > u)
                sets.unite(u, v);

    constexpr NodeId unset = static_cast<NodeId>(-1);
    std::vector<NodeId> label_of_root(n, unset);
    std::vector<NodeId> labels(n);
    for (NodeId u = 0; u < n; ++u) {
        const std::size_t root = sets.find(u);
        if (label_of_root[root] == unset)
            label_of_root[root] = u;
        labels[u] = label_of_root[root];
    }
    return labels;
}

std::vector<NodeId> ComponentReport::members(NodeId label) const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < labels.size(); ++u)
        if (labels[u] == label)
            out.push_back(u);
    return out;
}

std::vector<std::size_t> ComponentReport::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(components.size());
    for (const auto& c : components)
        out.push_back(c.size);
    return out;
}

ComponentReport analyze_components(const Graph& g, bool with_diameters) {
    ComponentReport report;
    report.labels = connected_components(g);
    const std::size_t n = g.num_nodes();

    // bucket members by label in one pass; labels are node ids
    std::vector<std::size_t> count(n, 0);
    for (NodeId label : report.labels)
        ++count[label];
    std::vector<std::size_t> start(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u)
        start[u + 1] = start[u] + count[u];
    std::vector<NodeId> members(n);
    {
        auto cursor = start;
        for (NodeId u = 0; u < n; ++u)
            members[cursor[report.labels[u]]++] = u;
    }

    for (NodeId label = 0; label < n; ++label) {
        if (count[label] == 0)
            continue;
        ComponentInfo info{label, count[label], -1};
        if (with_diameters) {
            const std::span<const NodeId> nodes(members.data() + start[label], count[label]);
            info.diameter = exact_diameter(g, nodes);
        }
        report.components.push_back(info);
    }
    std::stable_sort(report.components.begin(), report.components.end(),
                     [](const ComponentInfo& a, const ComponentInfo& b) { return a.size > b.size; });

    if (!report.components.empty()) {
        const auto& giant = report.components.front();
        report.giant_label = giant.label;
        report.giant_size = giant.size;
        report.giant_diameter = giant.diameter;
        if (report.components.size() > 1)
            report.second_size = report.components[1].size;
        report.max_component_diameter = giant.diameter;
        report.max_diameter_label = giant.label;
        for (const auto& c : report.components) {
            if (c.diameter > report.max_component_diameter) {
                report.max_component_diameter = c.diameter;
                report.max_diameter_label = c.label;
            }
        }
    }
    return report;
}

}  // namespace hrg
