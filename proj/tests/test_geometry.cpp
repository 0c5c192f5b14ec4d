#include <gtest/gtest.h>

#include <hrg/geometry.hpp>
#include <hrg/random.hpp>
#include <hrg/sampling.hpp>

#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

using namespace hrg;

namespace {

PolarPoint random_point(Rng& rng, double R) {
    return PolarPoint(R * rng.uniform01(), TWO_PI * rng.uniform01());
}

}  // namespace

TEST(ModelParams, RadiusIsTwoLogNPlusC)
{
    const ModelParams p(1000, 0.75, -1.5);
    EXPECT_EQ(p.R(), 2.0 * std::log(1000.0) + -1.5);
    EXPECT_EQ(p.R(), ModelParams::radius_for(1000, -1.5));
    EXPECT_TRUE(p.in_regime());
}

TEST(ModelParams, RejectsInvalidAndFlagsOutsideRegime)
{
    EXPECT_THROW(ModelParams(0, 0.75, 0.0), std::invalid_argument);
    EXPECT_THROW(ModelParams(100, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(ModelParams(100, -0.3, 0.0), std::invalid_argument);
    EXPECT_THROW(ModelParams(100, std::nan(""), 0.0), std::invalid_argument);
    EXPECT_FALSE(ModelParams(100, 0.4, 0.0).in_regime());
    EXPECT_FALSE(ModelParams(100, 1.2, 0.0).in_regime());
    EXPECT_FALSE(ModelParams(100, 0.5, 0.0).in_regime());
}

TEST(PolarPoint, NormalizesAngle)
{
    EXPECT_DOUBLE_EQ(PolarPoint(1.0, -0.5).phi, TWO_PI - 0.5);
    EXPECT_DOUBLE_EQ(PolarPoint(1.0, TWO_PI + 0.25).phi, 0.25);
    EXPECT_EQ(PolarPoint(1.0, TWO_PI).phi, 0.0);
    EXPECT_LT(PolarPoint(1.0, -1e-300).phi, TWO_PI);
    EXPECT_THROW(PolarPoint(-1.0, 0.0), std::invalid_argument);
}

TEST(DeltaPhi, Examples)
{
    EXPECT_EQ(delta_phi({3.0, 0.0}, {3.0, 0.0}), 0.0);
    EXPECT_NEAR(delta_phi({3.0, 0.1}, {3.0, TWO_PI - 0.1}), 0.2, 1e-15);
    EXPECT_NEAR(delta_phi({3.0, 0.0}, {3.0, PI}), PI, 1e-15);
    EXPECT_EQ(delta_phi({3.0, 0.1}, {3.0, 5.0}), delta_phi({3.0, 5.0}, {3.0, 0.1}));
}

TEST(HyperbolicDistance, IdentityAndOrigin)
{
    const PolarPoint u(7.3, 1.1);
    EXPECT_EQ(hyperbolic_distance(u, u), 0.0);
    for (double r : {1e-8, 1e-3, 0.5, 4.0, 20.0, 35.0})
        EXPECT_NEAR(hyperbolic_distance({r, 2.0}, {0.0, 5.0}), r, 1e-12 * std::max(1.0, r));
}

TEST(HyperbolicDistance, MatchesHighPrecisionFormula)
{
    const double d = hyperbolic_distance({5.0, 0.0}, {5.0, PI});
    EXPECT_NEAR(d, static_cast<double>(oracle::distance(5.0, 0.0, 5.0, PI)), 1e-12);

    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto u = random_point(rng, 25.0), v = random_point(rng, 25.0);
        const double expected = static_cast<double>(oracle::distance(u.r, u.phi, v.r, v.phi));
        EXPECT_NEAR(hyperbolic_distance(u, v), expected, 1e-12 * std::max(1.0, expected));
    }
}

TEST(HyperbolicDistance, SymmetryAndTriangleInequality)
{
    Rng rng(5);
    const double R = 2.0 * std::log(1e5);
    for (int i = 0; i < 100000; ++i) {
        const auto u = random_point(rng, R), v = random_point(rng, R), w = random_point(rng, R);
        ASSERT_EQ(hyperbolic_distance(u, v), hyperbolic_distance(v, u));
        ASSERT_LE(hyperbolic_distance(u, w), hyperbolic_distance(u, v) + hyperbolic_distance(v, w) + 1e-9);
    }
}

TEST(EdgeIndicator, Examples)
{
    const double R = 12.0;
    const PolarPoint u(4.0, 1.0);
    EXPECT_TRUE(edge_indicator(u, u, R));
    EXPECT_FALSE(edge_indicator({R, 0.0}, {R, PI}, R));
    // antipodal points at radii summing to exactly R sit on the threshold
    EXPECT_TRUE(edge_indicator({0.0, 0.0}, {R, PI}, R));
}

TEST(EdgeIndicator, AgreesWithDistanceOnRandomPairs)
{
    Rng rng(99);
    const double R = 2.0 * std::log(1e4);
    int disagreements = 0;
    for (int i = 0; i < 1000000; ++i) {
        const auto u = random_point(rng, R), v = random_point(rng, R);
        if (edge_indicator(u, v, R) != (hyperbolic_distance(u, v) <= R))
            ++disagreements;
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(ThetaExact, AllAnglesConnectForCentralPairs)
{
    EXPECT_EQ(theta_exact(2.0, 3.0, 10.0), PI);
    EXPECT_EQ(theta_exact(5.0, 5.0, 10.0), PI);
    EXPECT_THROW(theta_exact(0.0, 3.0, 10.0), std::domain_error);
    EXPECT_THROW(theta_exact(3.0, 0.0, 10.0), std::domain_error);
}

TEST(ThetaExact, MatchesHighPrecisionArccosForm)
{
    for (double R : {5.0, 15.0, 30.0}) {
        const double expected = static_cast<double>(oracle::theta(R, R, R));
        EXPECT_NEAR(theta_exact(R, R, R), expected, 1e-12 * expected);
    }
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        const double R = 10.0 + 20.0 * rng.uniform01();
        const double r = R * (0.01 + 0.99 * rng.uniform01());
        const double y = R * (0.01 + 0.99 * rng.uniform01());
        const double expected = static_cast<double>(oracle::theta(r, y, R));
        EXPECT_NEAR(theta_exact(r, y, R), expected, 1e-11 * std::max(expected, 1e-3));
    }
}

TEST(ThetaExact, IsTheConnectionThreshold)
{
    Rng rng(17);
    int tested = 0;
    while (tested < 100000) {
        const double R = 2.0 * std::log(1e5);
        const double r = R * rng.uniform01(), y = R * rng.uniform01();
        if (r + y < R || r <= 0.0 || y <= 0.0)
            continue;
        const double theta = theta_exact(r, y, R);
        ASSERT_EQ(theta, theta_exact(y, r, R));
        if (theta < 1e-8 || theta > PI - 1e-8)
            continue;
        ++tested;
        const double phi = TWO_PI * rng.uniform01();
        ASSERT_TRUE(edge_indicator({r, phi}, {y, phi + theta - 1e-9}, R)) << r << " " << y;
        ASSERT_FALSE(edge_indicator({r, phi}, {y, phi + theta + 1e-9}, R)) << r << " " << y;
    }
}

TEST(ThetaApprox, Examples)
{
    const double R = 20.0;
    EXPECT_DOUBLE_EQ(theta_approx(8.0, 12.0, R), 2.0);
    EXPECT_NEAR(theta_approx(8.0, 12.0 + 2.0 * std::log(2.0), R), 1.0, 1e-15);
    EXPECT_THROW(theta_approx(5.0, 14.9, R), std::domain_error);
}

// The relative error of the approximation is bounded by K e^{R - r - y}; the
// sweep below measured K ~= 0.834 on the same grid, 1 is the asserted bound.
// Beyond a gap of 20 the true error drops under double rounding noise.
TEST(ThetaApprox, RelativeErrorDecaysLikeExpOfGap)
{
    constexpr double K = 1.0;
    double worst = 0.0;
    for (double R : {10.0, 20.0, 30.0, 50.0}) {
        const int steps = 60;
        for (int a = 1; a <= steps; ++a) {
            for (int b = 1; b <= steps; ++b) {
                const double r = R * a / steps, y = R * b / steps;
                const double gap = r + y - R;
                if (gap < 3.0 || gap > 20.0)
                    continue;
                const double exact = theta_exact(r, y, R);
                const double rel = std::fabs(exact - theta_approx(r, y, R)) / exact;
                worst = std::max(worst, rel * std::exp(gap));
            }
        }
    }
    EXPECT_LE(worst, K);
    EXPECT_GT(worst, 0.5);

    // log-spaced gaps along the diagonal: slope of log(rel. error) is -1
    const double R = 40.0;
    std::vector<double> xs, ys;
    for (double gap = 3.0; gap <= 20.0; gap *= 1.15) {
        const double r = 0.5 * (R + gap);
        const double exact = theta_exact(r, r, R);
        xs.push_back(gap);
        ys.push_back(std::log(std::fabs(exact - theta_approx(r, r, R)) / exact));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    EXPECT_NEAR(slope, -1.0, 0.02);
}

TEST(RadialPdf, IsADensity)
{
    const ModelParams p(100, 0.75, 0.0);
    EXPECT_EQ(radial_pdf(0.0, p), 0.0);
    EXPECT_EQ(radial_pdf(-1.0, p), 0.0);
    EXPECT_EQ(radial_pdf(p.R() + 1.0, p), 0.0);
    const double mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double r) { return radial_pdf(r, p); }, 0.0, p.R(), 15, 1e-14);
    EXPECT_NEAR(mass, 1.0, 1e-9);
    // near the boundary the density approaches alpha e^{alpha (r - R)}
    EXPECT_NEAR(radial_pdf(p.R(), p) / p.alpha(), 1.0, 0.01);
}

TEST(BallMeasure, EndpointsAndAsymptotics)
{
    const ModelParams p(100, 0.75, 0.0);
    EXPECT_EQ(mu_ball_origin_exact(0.0, p), 0.0);
    EXPECT_EQ(mu_ball_origin_exact(p.R(), p), 1.0);

    const ModelParams p50(1, 0.75, 50.0);
    const double r = 0.5 * p50.R();
    const double asymptotic = std::exp(-p50.alpha() * (p50.R() - r));
    EXPECT_NEAR(mu_ball_origin_exact(r, p50) / asymptotic, 1.0, 0.01);
}

TEST(LensMeasure, LeadingConstantAndMonotonicity)
{
    const ModelParams p(1000, 0.75, 0.0);
    const double a = p.alpha();
    EXPECT_DOUBLE_EQ(mu_lens_approx(0.0, 0.0, p), 2.0 * a / (PI * (a - 0.5)));
    for (double m : {0.0, 1.0, 3.0}) {
        double previous = mu_lens_approx(0.0, m, p);
        for (double r = 0.25; r <= p.R(); r += 0.25) {
            const double current = mu_lens_approx(r, m, p);
            EXPECT_LT(current, previous);
            previous = current;
        }
    }
    EXPECT_THROW(mu_lens_approx(1.0, 0.0, ModelParams(100, 0.5, 0.0)), std::domain_error);
}

TEST(LensMeasure, AgreesWithMonteCarlo)
{
    const ModelParams p(1, 0.75, 30.0);
    const double R = p.R();
    const double r = 0.5 * R;
    const PolarPoint center(r, 0.0);
    const auto mc = mu_monte_carlo([&](const PolarPoint& q) { return edge_indicator(center, q, R); }, p,
                                   10000000, 2024);
    const double approx = mu_lens_approx(r, 0.0, p);
    const double slack = std::exp(-p.alpha() * r);
    EXPECT_LE(std::fabs(mc.estimate - approx), 0.1 * approx + slack)
        << "mc " << mc.estimate << " +- " << mc.std_error << " approx " << approx;
}

TEST(MonteCarlo, DegenerateRegionsAndSelfConsistency)
{
    const ModelParams p(500, 0.75, 0.0);
    const auto whole = mu_monte_carlo([](const PolarPoint&) { return true; }, p, 1000, 1);
    EXPECT_EQ(whole.estimate, 1.0);
    EXPECT_EQ(whole.std_error, 0.0);
    const auto empty = mu_monte_carlo([](const PolarPoint&) { return false; }, p, 1000, 1);
    EXPECT_EQ(empty.estimate, 0.0);

    const double half = 0.5 * p.R();
    const auto core = mu_monte_carlo([&](const PolarPoint& q) { return q.r <= half; }, p, 2000000, 9);
    EXPECT_NEAR(core.estimate, mu_ball_origin_exact(half, p), 3.0 * core.std_error);
    EXPECT_THROW(mu_monte_carlo([](const PolarPoint&) { return true; }, p, 0, 1), std::invalid_argument);
}
