#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace testsupport {

// Two-sample Kolmogorov-Smirnov statistic, tie-safe.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double stat = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    stat = std::max(stat, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }
  return stat;
}

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
inline double ks_vs_cdf(std::vector<double> xs,
                        const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    stat = std::max({stat, std::abs(f - static_cast<double>(i) / n),
                     std::abs(static_cast<double>(i + 1) / n - f)});
  }
  return stat;
}

// Critical value of the two-sample statistic at significance alpha for
// sample sizes n and m (asymptotic form).
inline double ks_two_sample_critical(double alpha, std::size_t n,
                                     std::size_t m) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c * std::sqrt(static_cast<double>(n + m) /
                       (static_cast<double>(n) * static_cast<double>(m)));
}

}  // namespace testsupport
