#include <hrg/sampling.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace hrg {

namespace {

constexpr std::uint64_t POINT_STREAM = 0;
constexpr std::uint64_t COUNT_STREAM = 1;

}  // namespace

std::string_view to_string(SamplingMode mode) {
    return mode == SamplingMode::FixedN ? "fixed" : "poisson";
}

SamplingMode parse_sampling_mode(std::string_view text) {
    if (text == "fixed")
        return SamplingMode::FixedN;
    if (text == "poisson")
        return SamplingMode::Poisson;
    throw std::invalid_argument("unknown sampling mode '" + std::string(text) + "'");
}

PointSet::PointSet(ModelParams params, std::vector<PolarPoint> points, SamplingMode mode, std::uint64_t seed,
                   std::string count_method)
    : params_(params)
    , points_(std::move(points))
    , mode_(mode)
    , seed_(seed)
    , count_method_(std::move(count_method))
{
    if (mode_ == SamplingMode::FixedN && points_.size() != params_.n())
        throw std::invalid_argument("PointSet: fixed-n set must hold exactly n points");
    for (const auto& p : points_) {
        if (!(p.r >= 0.0 && p.r <= params_.R()))
            throw std::invalid_argument("PointSet: radius outside [0, R]");
        if (!(p.phi >= 0.0 && p.phi < TWO_PI))
            throw std::invalid_argument("PointSet: angle outside [0, 2pi)");
    }
}

double radial_icdf(double u, const ModelParams& params) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("radial_icdf: u must lie in [0, 1]");
    const double a = params.alpha();
    const double r = std::acosh(1.0 + u * (std::cosh(a * params.R()) - 1.0)) / a;
    return std::min(r, params.R());
}

PolarPoint draw_point(Rng& rng, const ModelParams& params) {
    const double phi = TWO_PI * rng.uniform01();
    const double r = radial_icdf(rng.uniform01(), params);
    return PolarPoint(r, phi);
}

namespace {

std::vector<PolarPoint> draw_points(const ModelParams& params, std::uint64_t count, std::uint64_t seed) {
    Rng rng(split_seed(seed, POINT_STREAM));
    std::vector<PolarPoint> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        points.push_back(draw_point(rng, params));
    return points;
}

}  // namespace

PointSet sample_fixed(const ModelParams& params, std::uint64_t seed) {
    return PointSet(params, draw_points(params, params.n(), seed), SamplingMode::FixedN, seed);
}

PoissonDraw draw_poisson_count(double mean, Rng& rng) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("draw_poisson_count: mean must be finite and non-negative");
    if (mean < 10.0) {
        double p = std::exp(-mean);
        double cdf = p;
        const double u = rng.uniform01();
        std::uint64_t k = 0;
        // the cdf saturates in floating point before k gets large for mean < 10
        while (u > cdf && p > 0.0) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return {k, "inversion"};
    }
    std::poisson_distribution<std::uint64_t> dist(mean);
    return {dist(rng), "std::poisson_distribution"};
}

PointSet sample_poisson(const ModelParams& params, std::uint64_t seed) {
    Rng count_rng(split_seed(seed, COUNT_STREAM));
    const auto draw = draw_poisson_count(static_cast<double>(params.n()), count_rng);
    return PointSet(params, draw_points(params, draw.count, seed), SamplingMode::Poisson, seed, draw.method);
}

PointSet sample(const ModelParams& params, SamplingMode mode, std::uint64_t seed) {
    return mode == SamplingMode::FixedN ? sample_fixed(params, seed) : sample_poisson(params, seed);
}

CountCorrelation disjointness_check(const RegionPredicate& first, const RegionPredicate& second,
                                    const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                                    SamplingMode mode) {
    if (trials < 2)
        throw std::invalid_argument("disjointness_check: need at least two trials");
    std::vector<double> xs(trials), ys(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const PointSet ps = sample(params, mode, split_seed(seed, t));
        std::uint64_t a = 0, b = 0;
        for (const auto& p : ps.points()) {
            a += first(p) ? 1 : 0;
            b += second(p) ? 1 : 0;
        }
        xs[t] = static_cast<double>(a);
        ys[t] = static_cast<double>(b);
    }
    const double count = static_cast<double>(trials);
    double mx = 0.0, my = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        mx += xs[t];
        my += ys[t];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double dx = xs[t] - mx, dy = ys[t] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    CountCorrelation out;
    out.trials = trials;
    out.mean_first = mx;
    out.mean_second = my;
    out.correlation = (sxx > 0.0 && syy > 0.0) ? sxy / std::sqrt(sxx * syy) : 0.0;
    return out;
}

}  // namespace hrg
