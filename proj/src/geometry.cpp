#include <hrg/geometry.hpp>
#include <hrg/random.hpp>
#include <hrg/sampling.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hrg {

ModelParams::ModelParams(std::uint64_t n, double alpha, double C)
    : n_(n)
    , alpha_(alpha)
    , C_(C)
    , R_(radius_for(n, C))
{
    if (n == 0)
        throw std::invalid_argument("ModelParams: n must be at least 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("ModelParams: alpha must be a positive finite number");
    if (!std::isfinite(C))
        throw std::invalid_argument("ModelParams: C must be finite");
    // R = 0 is the one-point disc of n = 1, C = 0.
    if (!(R_ >= 0.0))
        throw std::invalid_argument("ModelParams: disc radius 2 ln n + C must be non-negative, got " +
                                    std::to_string(R_));
    // cosh(alpha R) must stay representable for the radial CDF and its inverse.
    if (alpha_ * R_ > 700.0)
        throw std::invalid_argument("ModelParams: alpha * R exceeds 700, cosh(alpha R) overflows");
}

double ModelParams::radius_for(std::uint64_t n, double C) {
    return 2.0 * std::log(static_cast<double>(n)) + C;
}

double normalize_angle(double phi) {
    if (!std::isfinite(phi))
        throw std::invalid_argument("normalize_angle: non-finite angle");
    if (phi >= 0.0 && phi < TWO_PI)
        return phi;
    double wrapped = std::fmod(phi, TWO_PI);
    if (wrapped < 0.0)
        wrapped += TWO_PI;
    // fmod of a value just below a multiple of 2pi can round up to 2pi
    if (wrapped >= TWO_PI)
        wrapped = 0.0;
    return wrapped;
}

PolarPoint::PolarPoint(double r_, double phi_)
    : r(r_)
    , phi(normalize_angle(phi_))
{
    if (!(r_ >= 0.0) || !std::isfinite(r_))
        throw std::invalid_argument("PolarPoint: radius must be finite and non-negative");
}

namespace {

double angle_between(double a, double b) {
    double d = std::fabs(a - b);
    return d > PI ? TWO_PI - d : d;
}

}  // namespace

double delta_phi(const PolarPoint& u, const PolarPoint& v) {
    return angle_between(u.phi, v.phi);
}

double one_minus_cos(double dphi) {
    const double s = std::sin(0.5 * dphi);
    return 2.0 * s * s;
}

double cosh_distance(const PolarPoint& u, const PolarPoint& v) {
    return std::cosh(u.r - v.r) + one_minus_cos(delta_phi(u, v)) * (std::sinh(u.r) * std::sinh(v.r));
}

double hyperbolic_distance(const PolarPoint& u, const PolarPoint& v) {
    // sinh^2(d/2) = sinh^2((r_u - r_v)/2) + sin^2(dphi/2) sinh r_u sinh r_v, the
    // half-argument form of the cosh identity; exact near d = 0 where acosh is not.
    const double radial = std::sinh(0.5 * (u.r - v.r));
    const double angular = std::sin(0.5 * delta_phi(u, v));
    const double half = radial * radial + angular * angular * (std::sinh(u.r) * std::sinh(v.r));
    return 2.0 * std::asinh(std::sqrt(std::max(0.0, half)));
}

EdgeKernel::EdgeKernel(double R_)
    : R(R_)
    , cosh_R(std::cosh(R_))
{}

EdgeKernel::Node EdgeKernel::prepare(const PolarPoint& p) {
    return {p.r, p.phi, std::sinh(p.r)};
}

bool EdgeKernel::connected(const Node& u, const Node& v) const {
    // every factor is evaluated symmetrically so connected(u, v) == connected(v, u) bitwise
    const double lhs =
        std::cosh(u.r - v.r) + one_minus_cos(angle_between(u.phi, v.phi)) * (u.sinh_r * v.sinh_r);
    return lhs <= cosh_R;
}

bool edge_indicator(const PolarPoint& u, const PolarPoint& v, double R) {
    const EdgeKernel kernel(R);
    return kernel.connected(EdgeKernel::prepare(u), EdgeKernel::prepare(v));
}

double theta_exact(double r, double y, double R) {
    if (!(r > 0.0) || !(y > 0.0))
        throw std::domain_error("theta_exact: radii must be positive");
    // arccos((cosh y cosh r - cosh R) / (sinh y sinh r)) rewritten through
    // 1 - cos(theta) = 2 sin^2(theta / 2) = (cosh R - cosh(r - y)) / (sinh r sinh y).
    const double half_gap = (std::cosh(R) - std::cosh(r - y)) / (2.0 * (std::sinh(r) * std::sinh(y)));
    if (half_gap <= 0.0)
        return 0.0;
    if (half_gap >= 1.0)
        return PI;
    return 2.0 * std::asin(std::sqrt(half_gap));
}

double theta_approx(double r, double y, double R) {
    if (y < R - r)
        throw std::domain_error("theta_approx: requires y >= R - r");
    return 2.0 * std::exp(0.5 * (R - r - y));
}

double radial_pdf(double r, const ModelParams& params) {
    if (r < 0.0 || r > params.R() || params.R() == 0.0)
        return 0.0;
    const double a = params.alpha();
    return a * std::sinh(a * r) / (std::cosh(a * params.R()) - 1.0);
}

double mu_ball_origin_exact(double r, const ModelParams& params) {
    const double a = params.alpha();
    if (r <= 0.0)
        return 0.0;
    if (r >= params.R())
        return 1.0;
    return (std::cosh(a * r) - 1.0) / (std::cosh(a * params.R()) - 1.0);
}

double mu_lens_approx(double r, double m, const ModelParams& params) {
    const double a = params.alpha();
    if (a == 0.5)
        throw std::domain_error("mu_lens_approx: alpha = 1/2 is a pole");
    return 2.0 * a / (PI * (a - 0.5)) * std::exp(-a * m - 0.5 * (r - m));
}

MonteCarloEstimate mu_monte_carlo(const RegionPredicate& region, const ModelParams& params,
                                  std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0)
        throw std::invalid_argument("mu_monte_carlo: samples must be at least 1");
    Rng rng(seed);
    MonteCarloEstimate out;
    out.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (region(draw_point(rng, params)))
            ++out.hits;
    }
    const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.estimate = p;
    out.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return out;
}

}  // namespace hrg
