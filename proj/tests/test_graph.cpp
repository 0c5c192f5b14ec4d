#include <gtest/gtest.h>

#include <hrg/graph.hpp>
#include <hrg/layers.hpp>
#include <hrg/validators.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

using namespace hrg;

namespace {

PointSet custom_points(const ModelParams& params, std::vector<PolarPoint> pts) {
    return PointSet(params, std::move(pts), SamplingMode::Poisson, 0);
}

template <typename F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TEST(Graph, FromEdgesSymmetrizesAndDeduplicates)
{
    const ModelParams p(4, 0.75, 0.0);
    const auto ps = custom_points(p, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 1}, {0, 1}};
    const auto g = Graph::from_edges(ps, edges);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.degree(3), 0u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

    const std::vector<Edge> loop{{2, 2}}, out_of_range{{0, 4}};
    EXPECT_THROW(Graph::from_edges(ps, loop), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(ps, out_of_range), std::invalid_argument);
}

TEST(BuildNaive, TrivialCases)
{
    const ModelParams one(1, 0.75, 0.0);
    EXPECT_EQ(build_naive(sample_fixed(one, 1)).num_edges(), 0u);

    const ModelParams p(1000, 0.75, 0.0);
    const auto g = build_naive(custom_points(p, {{0.1, 0.3}, {0.1, 3.5}}));
    EXPECT_EQ(g.num_edges(), 1u);

    const auto empty = custom_points(p, {});
    EXPECT_EQ(build_naive(empty).num_nodes(), 0u);
    EXPECT_EQ(build_banded(empty).num_nodes(), 0u);
}

TEST(BuildNaive, HandPlacedConfiguration)
{
    // R = 2 ln 5 + 4 ~= 7.2189; the pair (1, 3) sits at distance ~7.2364
    const ModelParams p(5, 0.75, 4.0);
    const auto ps = custom_points(p, {{1, 0}, {3, 0.5}, {4, 3.14159}, {5, 2.0}, {5.5, 4.0}});
    const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
    EXPECT_EQ(build_naive(ps).edges(), expected);
    EXPECT_EQ(build_banded(ps).edges(), expected);

    std::vector<Edge> by_oracle;
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = u + 1; v < 5; ++v)
            if (oracle::distance(ps[u].r, ps[u].phi, ps[v].r, ps[v].phi) <= oracle::Big(p.R()))
                by_oracle.push_back({u, v});
    EXPECT_EQ(by_oracle, expected);
}

TEST(BuildBanded, EqualsNaiveOnRandomPointSets)
{
    int graphs = 0;
    for (std::uint64_t n : {10, 100, 1000}) {
        for (std::uint64_t seed = 0; seed < 17; ++seed) {
            const ModelParams p(n, 0.75, seed % 3 == 0 ? -1.0 : 0.0);
            const auto ps = sample(p, seed % 2 ? SamplingMode::Poisson : SamplingMode::FixedN, 300 + seed);
            ASSERT_EQ(build_banded(ps), build_naive(ps)) << "n=" << n << " seed=" << seed;
            ++graphs;
        }
    }
    EXPECT_GE(graphs, 50);
}

TEST(BuildBanded, EqualsNaiveAcrossAlpha)
{
    for (double alpha : {0.3, 0.55, 0.9, 1.5}) {
        const ModelParams p(1500, alpha, 0.5);
        const auto ps = sample_fixed(p, 77);
        EXPECT_EQ(build_banded(ps), build_naive(ps)) << "alpha=" << alpha;
    }
}

TEST(BuildBanded, InvariantsOnLargeGraph)
{
    const auto g = build_banded(sample_fixed(ModelParams(50000, 0.75, 0.0), 4));
    EXPECT_TRUE(check_graph_invariants(g).ok());
    EXPECT_EQ(count_non_geometric_edges(g), 0u);
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        degree_sum += g.degree(u);
    EXPECT_EQ(degree_sum, 2 * g.num_edges());

    // sampled non-edges really are far apart
    Rng rng(8);
    int checked = 0;
    while (checked < 10000) {
        const auto u = static_cast<NodeId>(rng.uniform_index(g.num_nodes()));
        const auto v = static_cast<NodeId>(rng.uniform_index(g.num_nodes()));
        if (u == v || g.has_edge(u, v))
            continue;
        ++checked;
        ASSERT_FALSE(edge_indicator(g.points()[u], g.points()[v], g.params().R()));
    }
}

// Naive cost is exactly n(n-1)/2 edge tests, so its time at n = 10^5 is
// extrapolated quadratically from a smaller run.
TEST(BuildBanded, AtLeastTwentyTimesFasterThanNaive)
{
    const ModelParams big(100000, 0.75, 0.0);
    const auto ps_big = sample_fixed(big, 1);
    const double banded = seconds([&] { build_banded(ps_big); });

    const std::uint64_t small_n = 10000;
    const auto ps_small = sample_fixed(ModelParams(small_n, 0.75, 0.0), 1);
    const double naive_small = seconds([&] { build_naive(ps_small); });
    const double scale = (1e5 * (1e5 - 1)) / (double(small_n) * double(small_n - 1));
    const double naive = naive_small * scale;
    EXPECT_GE(naive / banded, 20.0) << "banded " << banded << " s, naive ~" << naive << " s";
    RecordProperty("speedup", std::to_string(naive / banded));
}

TEST(BandIndex, BandsMirrorLayers)
{
    const ModelParams p(5000, 0.75, 0.0);
    const auto ps = sample_fixed(p, 9);
    const BandIndex index(ps);
    EXPECT_EQ(index.count(), static_cast<int>(std::floor(p.R())) + 1);
    std::size_t total = 0;
    for (const auto& band : index.bands()) {
        total += band.ids.size();
        EXPECT_TRUE(std::is_sorted(band.angles.begin(), band.angles.end()));
        for (std::size_t k = 0; k < band.ids.size(); ++k) {
            const auto& q = ps[band.ids[k]];
            EXPECT_EQ(band.angles[k], q.phi);
            EXPECT_EQ(layer_index(q.r, p.R()), band.index);
            EXPECT_EQ(index.band_of(band.ids[k]), band.index);
            EXPECT_GT(q.r, p.R() - band.index);
            EXPECT_LE(q.r, p.R() - band.index + 1);
        }
    }
    EXPECT_EQ(total, ps.size());
}

TEST(ThetaUpper, CentralBandsAllowEveryAngle)
{
    const double R = 20.0;
    EXPECT_EQ(theta_upper(10, 10, R), PI);
    EXPECT_EQ(theta_upper(12, 15, R), PI);
    EXPECT_EQ(theta_upper(9, 9, R), PI);  // i + j >= R - 2
    const double R_big = 40.0;
    EXPECT_NEAR(theta_upper(1, 1, R_big) / (2.0 * std::exp((2.0 - R_big) / 2.0)), 1.0, 1e-15);
    EXPECT_LT(theta_upper(1, 1, R_big), 1e-7);
}

TEST(ThetaUpper, BoundsTheExactAngle)
{
    Rng rng(123);
    for (int trial = 0; trial < 100000; ++trial) {
        const double R = 5.0 + 35.0 * rng.uniform01();
        const int bands = static_cast<int>(std::floor(R)) + 1;
        const int i = 1 + static_cast<int>(rng.uniform_index(bands));
        const int j = 1 + static_cast<int>(rng.uniform_index(bands));
        const double lo_i = std::max(0.0, R - i), lo_j = std::max(0.0, R - j);
        const double r = lo_i + (R - i + 1 - lo_i) * (1.0 - rng.uniform01());
        const double y = lo_j + (R - j + 1 - lo_j) * (1.0 - rng.uniform01());
        if (r <= 0.0 || y <= 0.0)
            continue;
        ASSERT_LE(theta_exact(r, y, R), theta_upper(i, j, R)) << "R=" << R << " i=" << i << " j=" << j;
    }
}

TEST(Monotonicity, LoweringARadiusKeepsTheEdge)
{
    const ModelParams p(3000, 0.75, 0.0);
    const auto g = build_banded(sample_fixed(p, 31));
    Rng rng(2);
    std::size_t checked = 0;
    for (const Edge& e : g.edges()) {
        const PolarPoint u = g.points()[e.u], v = g.points()[e.v];
        for (int k = 0; k < 3; ++k) {
            const double f = rng.uniform01();
            ASSERT_TRUE(edge_indicator({u.r * f, u.phi}, v, p.R()));
            ASSERT_TRUE(edge_indicator(u, {v.r * f, v.phi}, p.R()));
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000u);
}
