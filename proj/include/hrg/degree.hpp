#pragma once

#include <hrg/graph.hpp>

#include <cstdint>
#include <vector>

namespace hrg {

inline constexpr std::uint64_t MIN_TAIL_SAMPLES = 50;
inline constexpr std::uint64_t MIN_X_MIN = 10;

struct DegreeStats {
    std::vector<std::uint64_t> histogram;  // histogram[d] = nodes of degree d
    double mean = 0.0;                     // 2m / n
    double beta_hat = 0.0;                 // NaN when the tail is empty
    std::uint64_t x_min = 0;
    std::uint64_t tail_samples = 0;
    bool reliable = false;  // at least MIN_TAIL_SAMPLES degrees >= x_min
    double beta_theory = 0.0;
    double mean_theory = 0.0;  // NaN at alpha = 1/2
};

/// Degree exponent of the model: 2 alpha + 1 for alpha >= 1/2, else 2.
double theoretical_beta(double alpha);

/// Limiting average degree 2 alpha^2 e^{-C/2} / (pi (alpha - 1/2)^2).
double theoretical_mean_degree(const ModelParams& params);

/**
 * Discrete power-law tail estimate
 *   beta_hat = 1 + k / sum(ln(d_i / (x_min - 1/2)))  over the k degrees d_i >= x_min
 * with x_min = max(10, smallest degree whose tail has at least 50 samples).
 */
double power_law_mle(const std::vector<std::uint64_t>& histogram, std::uint64_t x_min);

DegreeStats degree_stats(const Graph& g);

}  // namespace hrg
