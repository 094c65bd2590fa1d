#pragma once

#include <optional>
#include <span>

namespace wfm {

struct EssResult {
  double ess = 0.0;
  std::size_t n = 0;
  std::size_t truncation_lag = 0;  // last autocorrelation lag included
  bool zero_variance = false;
  bool capped = false;  // raw estimate exceeded n (negative autocorrelation)
};

/// Effective sample size n / (1 + 2 sum rho_k), with the autocorrelation sum
/// truncated by Geyer's initial positive sequence: pairs
/// rho_{2m} + rho_{2m+1} are added until the first nonpositive pair.
/// Estimates above n are capped at n. Needs at least 10 values.
EssResult effective_sample_size(std::span<const double> values);

/// Monte Carlo standard error of the mean from a Tukey-Hanning lag-window
/// spectral variance estimate at frequency zero, bandwidth floor(sqrt(n)).
/// Needs at least 100 values.
double mcse_tukey_hanning(std::span<const double> values);

struct DiagnosticReport {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  std::optional<EssResult> ess;  // absent below 10 values
  std::optional<double> mcse;    // absent below 100 values
};

DiagnosticReport diagnose(std::span<const double> values);

enum class Tail { upper, lower };

/// Add-one Monte Carlo p-value: (1 + #{v >= observed}) / (1 + n) for the
/// upper tail, with <= for the lower tail. Never zero.
double empirical_p_value(double observed, std::span<const double> null_values,
                         Tail tail = Tail::upper);

}  // namespace wfm
