#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hrg::stats {

/// Two-sided one-sample Kolmogorov-Smirnov statistic sup |F_n - F|.
/// `sample` must be sorted ascending.
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

/// Two-sample statistic; both inputs sorted ascending.
double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b);

/// Asymptotic p-value Q_KS((sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D), ne the
/// effective sample size.
double ks_p_value(double statistic, double effective_n);

/// Asymptotic critical value of D at level 1%: 1.6276 / sqrt(n).
double ks_critical_1pct(double effective_n);

/// Pearson chi-square statistic of observed counts against equal expected cells.
double chi_squared_uniform(std::span<const std::uint64_t> counts);

/// Upper-tail probability of the chi-square distribution.
double chi_squared_p_value(double statistic, double dof);
double chi_squared_quantile(double p, double dof);

/// Two-sided normal p-value of a z-score.
double normal_two_sided_p(double z);

double mean(std::span<const double> xs);
/// Unbiased sample variance.
double variance(std::span<const double> xs);
double median(std::vector<double> xs);

}  // namespace hrg::stats
