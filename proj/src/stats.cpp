#include <hrg/stats.hpp>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrg::stats {

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b) {
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_p_value(double statistic, double effective_n) {
    const double root = std::sqrt(effective_n);
    const double lambda = (root + 0.12 + 0.11 / root) * statistic;
    if (lambda < 1e-3)
        return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum))
            break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_critical_1pct(double effective_n) {
    return 1.6276 / std::sqrt(effective_n);
}

double chi_squared_uniform(std::span<const std::uint64_t> counts) {
    if (counts.empty())
        throw std::invalid_argument("chi_squared_uniform: no cells");
    double total = 0.0;
    for (auto c : counts)
        total += static_cast<double>(c);
    const double expected = total / static_cast<double>(counts.size());
    double stat = 0.0;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

double chi_squared_p_value(double statistic, double dof) {
    const boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

double chi_squared_quantile(double p, double dof) {
    const boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::quantile(dist, p);
}

double normal_two_sided_p(double z) {
    const boost::math::normal_distribution<double> dist;
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(z)));
}

double mean(std::span<const double> xs) {
    if (xs.empty())
        return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
    if (xs.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs)
        s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double median(std::vector<double> xs) {
    if (xs.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

}  // namespace hrg::stats
