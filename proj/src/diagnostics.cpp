#include "wfm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "wfm/error.hpp"

namespace wfm {

namespace {

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

bool constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

// Biased (divide-by-n) autocovariance at lag k of centred data.
double autocovariance(const std::vector<double>& centred, std::size_t k) {
  const std::size_t n = centred.size();
  double s = 0.0;
  for (std::size_t t = 0; t + k < n; ++t) s += centred[t] * centred[t + k];
  return s / static_cast<double>(n);
}

std::vector<double> centre(std::span<const double> x) {
  const double mu = mean_of(x);
  std::vector<double> c(x.begin(), x.end());
  for (double& v : c) v -= mu;
  return c;
}

}  // namespace

EssResult effective_sample_size(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 10) throw Error("ESS needs at least 10 values");
  EssResult result;
  result.n = n;
  if (constant(values)) {
    result.zero_variance = true;
    return result;
  }
  const auto c = centre(values);
  const double gamma0 = autocovariance(c, 0);
  // sigma^2 = -gamma_0 + 2 * sum_{m=0}^{M} (gamma_{2m} + gamma_{2m+1})
  double pair_sum = 0.0;
  for (std::size_t m = 0; 2 * m + 1 < n; ++m) {
    const double pair = (m == 0 ? gamma0 : autocovariance(c, 2 * m)) +
                        autocovariance(c, 2 * m + 1);
    if (pair <= 0.0) break;
    pair_sum += pair;
    result.truncation_lag = 2 * m + 1;
  }
  const double sigma2 = -gamma0 + 2.0 * pair_sum;
  const double nd = static_cast<double>(n);
  if (sigma2 <= 0.0 || nd * gamma0 / sigma2 > nd) {
    result.ess = nd;
    result.capped = true;
  } else {
    result.ess = nd * gamma0 / sigma2;
  }
  return result;
}

double mcse_tukey_hanning(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 100) throw Error("Tukey-Hanning MCSE needs at least 100 values");
  if (constant(values)) return 0.0;
  const auto c = centre(values);
  const auto b = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
  double sigma2 = autocovariance(c, 0);
  for (std::size_t k = 1; k <= b && k < n; ++k) {
    const double window =
        0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(k) /
                              static_cast<double>(b)));
    sigma2 += 2.0 * window * autocovariance(c, k);
  }
  return std::sqrt(std::max(sigma2, 0.0) / static_cast<double>(n));
}

DiagnosticReport diagnose(std::span<const double> values) {
  DiagnosticReport report;
  report.n = values.size();
  if (values.empty()) return report;
  report.mean = mean_of(values);
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - report.mean) * (v - report.mean);
    report.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  if (values.size() >= 10) report.ess = effective_sample_size(values);
  if (values.size() >= 100) report.mcse = mcse_tukey_hanning(values);
  return report;
}

double empirical_p_value(double observed, std::span<const double> null_values, Tail tail) {
  if (null_values.empty()) throw Error("empirical p-value needs a nonempty null sample");
  std::size_t extreme = 0;
  for (double v : null_values) {
    if (tail == Tail::upper ? v >= observed : v <= observed) ++extreme;
  }
  return static_cast<double>(1 + extreme) / static_cast<double>(1 + null_values.size());
}

}  // namespace wfm
