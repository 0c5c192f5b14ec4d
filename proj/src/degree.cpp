#include <hrg/degree.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hrg {

double theoretical_beta(double alpha) {
    return alpha >= 0.5 ? 2.0 * alpha + 1.0 : 2.0;
}

double theoretical_mean_degree(const ModelParams& params) {
    const double a = params.alpha();
    if (a == 0.5)
        return std::numeric_limits<double>::quiet_NaN();
    return 2.0 * a * a * std::exp(-0.5 * params.C()) / (PI * (a - 0.5) * (a - 0.5));
}

double power_law_mle(const std::vector<std::uint64_t>& histogram, std::uint64_t x_min) {
    double log_sum = 0.0;
    std::uint64_t k = 0;
    const double shift = static_cast<double>(x_min) - 0.5;
    for (std::uint64_t d = x_min; d < histogram.size(); ++d) {
        if (histogram[d] == 0)
            continue;
        k += histogram[d];
        log_sum += static_cast<double>(histogram[d]) * std::log(static_cast<double>(d) / shift);
    }
    if (k == 0 || !(log_sum > 0.0))
        return std::numeric_limits<double>::quiet_NaN();
    return 1.0 + static_cast<double>(k) / log_sum;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats stats;
    const std::size_t n = g.num_nodes();
    std::size_t max_degree = 0;
    for (NodeId u = 0; u < n; ++u)
        max_degree = std::max(max_degree, g.degree(u));
    stats.histogram.assign(n == 0 ? 0 : max_degree + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        ++stats.histogram[g.degree(u)];
    stats.mean = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);

    // the smallest degree with a tail of at least MIN_TAIL_SAMPLES nodes is the
    // smallest degree present once n >= MIN_TAIL_SAMPLES
    std::uint64_t smallest_with_tail = 0;
    {
        std::uint64_t tail = 0;
        for (std::size_t d = stats.histogram.size(); d-- > 0;) {
            tail += stats.histogram[d];
            if (stats.histogram[d] > 0 && tail >= MIN_TAIL_SAMPLES)
                smallest_with_tail = d;
        }
    }
    stats.x_min = std::max(MIN_X_MIN, smallest_with_tail);
    for (std::size_t d = stats.x_min; d < stats.histogram.size(); ++d)
        stats.tail_samples += stats.histogram[d];
    stats.reliable = stats.tail_samples >= MIN_TAIL_SAMPLES;
    stats.beta_hat = power_law_mle(stats.histogram, stats.x_min);
    stats.beta_theory = theoretical_beta(g.params().alpha());
    stats.mean_theory = theoretical_mean_degree(g.params());
    return stats;
}

}  // namespace hrg
