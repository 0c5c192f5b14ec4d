#include <hrg/bands.hpp>
#include <hrg/components.hpp>
#include <hrg/diameter.hpp>
#include <hrg/graph.hpp>
#include <hrg/layers.hpp>
#include <hrg/sampling.hpp>
#include <hrg/stats.hpp>
#include <hrg/validators.hpp>
#include <hrg/verify.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hrg {

namespace {

class Suite {
public:
    Suite(const std::function<void(const CheckResult&)>& sink)
        : sink_(sink)
    {}

    void exact(std::string name, bool passed, std::string detail) {
        push({std::move(name), passed, std::nullopt, std::move(detail)});
    }

    void statistical(std::string name, double p, std::string detail) {
        push({std::move(name), p >= VERIFY_P_THRESHOLD, p, std::move(detail)});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    void push(CheckResult r) {
        if (sink_)
            sink_(r);
        results_.push_back(std::move(r));
    }

    const std::function<void(const CheckResult&)>& sink_;
    std::vector<CheckResult> results_;
};

template <typename... Args>
std::string describe(const Args&... args) {
    std::ostringstream os;
    os.precision(6);
    (os << ... << args);
    return os.str();
}

PolarPoint random_point(Rng& rng, double R) {
    return PolarPoint(R * rng.uniform01(), TWO_PI * rng.uniform01());
}

void geometry_checks(Suite& suite, Rng& rng, std::uint64_t count) {
    const double R = ModelParams::radius_for(10000, 0.0);

    std::uint64_t asymmetric = 0, triangle = 0, radial = 0;
    double worst_radial = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto u = random_point(rng, R), v = random_point(rng, R), w = random_point(rng, R);
        if (hyperbolic_distance(u, v) != hyperbolic_distance(v, u))
            ++asymmetric;
        if (hyperbolic_distance(u, w) > hyperbolic_distance(u, v) + hyperbolic_distance(v, w) + 1e-9)
            ++triangle;
        const double err = std::fabs(hyperbolic_distance(u, PolarPoint(0.0, v.phi)) - u.r);
        worst_radial = std::max(worst_radial, err);
        if (err > 1e-12)
            ++radial;
    }
    suite.exact("geometry.distance_symmetry", asymmetric == 0, describe(asymmetric, " asymmetric of ", count));
    suite.exact("geometry.triangle_inequality", triangle == 0, describe(triangle, " violations of ", count));
    suite.exact("geometry.radial_identity", radial == 0, describe("max error ", worst_radial));

    std::uint64_t inconsistent = 0, unsymmetric_theta = 0, tested = 0;
    while (tested < count) {
        const double r = R * (0.05 + 0.95 * rng.uniform01());
        const double y = R * (0.05 + 0.95 * rng.uniform01());
        if (r + y < R)
            continue;
        ++tested;
        const double theta = theta_exact(r, y, R);
        if (theta != theta_exact(y, r, R))
            ++unsymmetric_theta;
        const double phi = TWO_PI * rng.uniform01();
        const PolarPoint a(r, phi);
        const bool inside = edge_indicator(a, PolarPoint(y, phi + theta - 1e-9), R);
        const bool outside = edge_indicator(a, PolarPoint(y, phi + theta + 1e-9), R);
        if (theta > 1e-9 && theta < PI - 1e-9 && (!inside || outside))
            ++inconsistent;
    }
    suite.exact("geometry.threshold_consistency", inconsistent == 0, describe(inconsistent, " of ", tested));
    suite.exact("geometry.theta_symmetry", unsymmetric_theta == 0, describe(unsymmetric_theta, " of ", tested));

    const ModelParams params(10000, 0.75, 0.0);
    double worst_round_trip = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = rng.uniform01();
        worst_round_trip = std::max(worst_round_trip, std::fabs(mu_ball_origin_exact(radial_icdf(u, params), params) - u));
    }
    suite.exact("geometry.measure_normalization",
                mu_ball_origin_exact(params.R(), params) == 1.0 && worst_round_trip <= 1e-9,
                describe("mu(B0(R)) = ", mu_ball_origin_exact(params.R(), params), ", icdf round trip ",
                         worst_round_trip));
}

void bound_checks(Suite& suite, std::uint64_t mc_samples, std::uint64_t seed) {
    // relative error of the angle approximation against exp(R - r - y)
    constexpr double K = 1.0;
    double worst = 0.0;
    for (double R : {20.0, 30.0, 40.0}) {
        for (int a = 1; a <= 40; ++a) {
            for (int b = 1; b <= 40; ++b) {
                const double r = R * a / 40.0, y = R * b / 40.0;
                const double gap = r + y - R;
                if (gap < 3.0)
                    continue;
                const double exact = theta_exact(r, y, R);
                const double rel = std::fabs(exact - theta_approx(r, y, R)) / exact;
                worst = std::max(worst, rel / std::exp(-gap));
            }
        }
    }
    suite.exact("bounds.angle_approximation", worst <= K, describe("max rel.err / e^{R-r-y} = ", worst));

    {
        const ModelParams p50(1, 0.75, 50.0);
        const double r = 0.5 * p50.R();
        const double exact = mu_ball_origin_exact(r, p50);
        const double approx = std::exp(-p50.alpha() * (p50.R() - r));
        const double rel = std::fabs(exact / approx - 1.0);
        suite.exact("bounds.ball_measure", rel <= 0.01, describe("relative gap ", rel, " at R = 50"));
    }
    {
        const ModelParams p30(1, 0.75, 30.0);
        const double R = p30.R();
        const double r = 0.5 * R;
        const PolarPoint center(r, 0.0);
        const auto region = [&](const PolarPoint& q) { return q.r <= R && edge_indicator(center, q, R); };
        const auto mc = mu_monte_carlo(region, p30, mc_samples, seed);
        const double approx = mu_lens_approx(r, 0.0, p30);
        const double slack = std::exp(-p30.alpha() * r);
        const double gap = std::fabs(mc.estimate - approx);
        suite.exact("bounds.lens_measure", gap <= 0.1 * approx + slack,
                    describe("monte carlo ", mc.estimate, " +- ", mc.std_error, " vs ", approx, " (slack ", slack,
                             ")"));
    }
}

void sampler_checks(Suite& suite, std::uint64_t points, std::uint64_t poisson_trials, std::uint64_t seed) {
    const ModelParams params(points, 0.75, 0.0);
    const PointSet ps = sample_fixed(params, seed);

    std::vector<double> radii;
    radii.reserve(ps.size());
    for (const auto& p : ps.points())
        radii.push_back(p.r);
    std::sort(radii.begin(), radii.end());
    const double n = static_cast<double>(radii.size());
    const double d = stats::ks_statistic(radii, [&](double r) { return mu_ball_origin_exact(r, params); });
    suite.statistical("sampling.radial_ks", stats::ks_p_value(d, n), describe("D = ", d));

    std::vector<std::uint64_t> bins(100, 0);
    for (const auto& p : ps.points())
        ++bins[std::min<std::size_t>(99, static_cast<std::size_t>(p.phi / TWO_PI * 100.0))];
    const double chi2 = stats::chi_squared_uniform(bins);
    suite.statistical("sampling.angle_chi2", stats::chi_squared_p_value(chi2, 99.0), describe("chi2 = ", chi2));

    suite.exact("sampling.determinism", sample_fixed(params, seed) == ps && sample_poisson(params, seed) == sample_poisson(params, seed),
                "identical seeds reproduce identical point sets");

    const ModelParams small(100, 0.75, 0.0);
    std::vector<double> counts;
    counts.reserve(poisson_trials);
    for (std::uint64_t t = 0; t < poisson_trials; ++t)
        counts.push_back(static_cast<double>(sample_poisson(small, split_seed(seed, 1000 + t)).size()));
    const double m = stats::mean(counts);
    const double z = (m - 100.0) / std::sqrt(100.0 / static_cast<double>(poisson_trials));
    suite.statistical("sampling.poisson_mean", stats::normal_two_sided_p(z), describe("mean ", m));
    const double dispersion = stats::variance(counts) * static_cast<double>(poisson_trials - 1) / 100.0;
    const double dof = static_cast<double>(poisson_trials - 1);
    const double upper = stats::chi_squared_p_value(dispersion, dof);
    suite.statistical("sampling.poisson_variance", 2.0 * std::min(upper, 1.0 - upper),
                      describe("variance ", stats::variance(counts)));

    const PointSet pp = sample_poisson(params, split_seed(seed, 99));
    std::vector<double> poisson_radii;
    for (const auto& p : pp.points())
        poisson_radii.push_back(p.r);
    std::sort(poisson_radii.begin(), poisson_radii.end());
    const double d2 = stats::ks_two_sample_statistic(radii, poisson_radii);
    const double ne = n * static_cast<double>(poisson_radii.size()) / (n + static_cast<double>(poisson_radii.size()));
    suite.statistical("sampling.fixed_vs_poisson_ks", stats::ks_p_value(d2, ne), describe("D = ", d2));
}

void graph_checks(Suite& suite, const VerifyOptions& options, std::uint64_t max_n, int sets) {
    std::uint64_t mismatched = 0, invariant_failures = 0, non_geometric = 0, clique_failures = 0;
    std::uint64_t underpass_triples = 0, underpass_violations = 0, diameter_mismatch = 0, diameters = 0;
    std::uint64_t label_mismatch = 0;
    for (int k = 0; k < sets; ++k) {
        const std::uint64_t n = std::max<std::uint64_t>(10, max_n >> (k % 3 * 2));
        const double alpha = 0.55 + 0.4 * (k % 4) / 3.0;
        const double C = -1.0 + (k % 5) * 0.5;
        const ModelParams params(n, alpha, C);
        const PointSet ps = sample(params, k % 2 ? SamplingMode::Poisson : SamplingMode::FixedN,
                                   split_seed(options.seed, 500 + static_cast<std::uint64_t>(k)));
        Graph g = build_banded(ps);
        if (options.inject_fault && k == 0 && g.num_edges() > 0) {
            std::vector<std::vector<NodeId>> adjacency(g.num_nodes());
            for (NodeId u = 0; u < g.num_nodes(); ++u)
                adjacency[u].assign(g.neighbors(u).begin(), g.neighbors(u).end());
            const Edge e = g.edges().front();
            std::erase(adjacency[e.u], e.v);
            g = Graph(ps, adjacency);
        }
        if (!(g == build_naive(ps)))
            ++mismatched;
        if (!check_graph_invariants(g).ok())
            ++invariant_failures;
        non_geometric += count_non_geometric_edges(g);
        if (!check_core_clique(g))
            ++clique_failures;
        const auto up = check_underpass(g, 2000, split_seed(options.seed, 700 + static_cast<std::uint64_t>(k)));
        underpass_triples += up.triples;
        underpass_violations += up.violations;

        // label agreement with a plain BFS flood fill
        const auto labels = connected_components(g);
        std::vector<NodeId> flood(g.num_nodes(), static_cast<NodeId>(-1));
        for (NodeId s = 0; s < g.num_nodes(); ++s) {
            if (flood[s] != static_cast<NodeId>(-1))
                continue;
            const auto dist = bfs_distances(g, s);
            for (NodeId u = 0; u < g.num_nodes(); ++u)
                if (dist[u] >= 0 && flood[u] == static_cast<NodeId>(-1))
                    flood[u] = s;
        }
        if (flood != labels)
            ++label_mismatch;

        if (g.num_nodes() <= 400 && check_graph_invariants(g).ok()) {
            const auto report = analyze_components(g, false);
            for (const auto& c : report.components) {
                if (c.size < 2)
                    continue;
                const auto members = report.members(c.label);
                ++diameters;
                if (exact_diameter(g, members) != diameter_all_pairs(g, members))
                    ++diameter_mismatch;
            }
        }
    }
    suite.exact("graph.banded_equals_naive", mismatched == 0, describe(mismatched, " of ", sets, " differ"));
    suite.exact("graph.invariants", invariant_failures == 0,
                describe(invariant_failures, " of ", sets, " graphs broke symmetry/simplicity/handshake"));
    suite.exact("graph.edges_within_R", non_geometric == 0, describe(non_geometric, " edges longer than R"));
    suite.exact("analysis.core_clique", clique_failures == 0, describe(clique_failures, " of ", sets));
    suite.exact("analysis.underpass", underpass_violations == 0,
                describe(underpass_violations, " violations in ", underpass_triples, " triples"));
    suite.exact("analysis.components_oracle", label_mismatch == 0, describe(label_mismatch, " of ", sets));
    suite.exact("analysis.diameter_oracle", diameter_mismatch == 0,
                describe(diameter_mismatch, " of ", diameters, " components"));
}

// Inner-band diagnostics for several band constants on one graph. The band
// must shrink as c grows; hop counts and runs are reported, not judged.
void band_checks(Suite& suite, std::uint64_t n, std::uint64_t seed) {
    const auto g = build_banded(sample_fixed(ModelParams(n, 0.75, 0.0), seed));
    std::size_t previous = g.num_nodes();
    for (double c : {0.5, 1.0, 2.0}) {
        const auto d = band_diagnostics(g, c);
        const bool shrinks = d.inner_count <= previous;
        previous = d.inner_count;
        suite.exact(describe("analysis.inner_band_c", c), shrinks && d.inner_count + d.outer_count == g.num_nodes(),
                    describe("n = ", n, ": ", d.inner_count, " inner nodes, max hops ", d.hops.max_hops,
                             ", unreachable ", d.hops.unreachable, ", max empty run ", d.max_empty_sector_run));
    }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result) {
    Suite suite(on_result);
    Rng rng(split_seed(options.seed, 1));
    geometry_checks(suite, rng, options.quick ? 20000 : 100000);
    bound_checks(suite, options.quick ? 1000000 : 10000000, split_seed(options.seed, 2));
    sampler_checks(suite, options.quick ? 100000 : 1000000, options.quick ? 2000 : 10000, split_seed(options.seed, 3));
    graph_checks(suite, options, options.quick ? 1000 : 2000, options.quick ? 12 : 30);
    band_checks(suite, options.quick ? 8192 : 65536, split_seed(options.seed, 4));
    return suite.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace hrg
