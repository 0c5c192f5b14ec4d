#pragma once

#include <hrg/geometry.hpp>
#include <hrg/random.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hrg {

enum class SamplingMode { FixedN, Poisson };

std::string_view to_string(SamplingMode mode);
/// Accepts "fixed" and "poisson"; throws std::invalid_argument otherwise.
SamplingMode parse_sampling_mode(std::string_view text);

/**
 * Sampled node positions, ids 0..size()-1 in sampling order.
 *
 * Construction validates that every point lies inside the disc and, for the
 * fixed-n model, that there are exactly n points. Immutable afterwards.
 */
class PointSet {
public:
    PointSet(ModelParams params, std::vector<PolarPoint> points, SamplingMode mode, std::uint64_t seed,
             std::string count_method = {});

    const ModelParams& params() const { return params_; }
    const std::vector<PolarPoint>& points() const { return points_; }
    const PolarPoint& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    SamplingMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }
    /// How the Poisson node count was drawn ("inversion" or
    /// "std::poisson_distribution"); empty for fixed-n sets.
    const std::string& count_method() const { return count_method_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    ModelParams params_;
    std::vector<PolarPoint> points_;
    SamplingMode mode_;
    std::uint64_t seed_;
    std::string count_method_;
};

/// Inverse of mu_ball_origin_exact: (1/alpha) arccosh(1 + u (cosh(alpha R) - 1)).
double radial_icdf(double u, const ModelParams& params);

/// One point from the model density: uniform angle, radius by inversion.
PolarPoint draw_point(Rng& rng, const ModelParams& params);

PointSet sample_fixed(const ModelParams& params, std::uint64_t seed);

/// Node count ~ Poisson(n), then i.i.d. points exactly as in sample_fixed.
/// The point stream is shared with sample_fixed, so a Poisson set is a prefix
/// or extension of the fixed-n set with the same seed.
PointSet sample_poisson(const ModelParams& params, std::uint64_t seed);

PointSet sample(const ModelParams& params, SamplingMode mode, std::uint64_t seed);

struct PoissonDraw {
    std::uint64_t count;
    const char* method;
};

/// Inversion below mean 10, std::poisson_distribution otherwise.
PoissonDraw draw_poisson_count(double mean, Rng& rng);

struct CountCorrelation {
    double correlation = 0.0;
    double mean_first = 0.0;
    double mean_second = 0.0;
    std::uint64_t trials = 0;
};

/// Pearson correlation of the node counts falling in two regions across
/// independent samples. Regions are expected to be disjoint; the estimate is
/// near zero for the Poisson process and negative for fixed n.
CountCorrelation disjointness_check(const RegionPredicate& first, const RegionPredicate& second,
                                    const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                                    SamplingMode mode = SamplingMode::Poisson);

}  // namespace hrg
