#include "wfm/generators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wfm/error.hpp"

namespace wfm {

WeightPreset parse_weight_preset(std::string_view name) {
  if (name == "ones") return WeightPreset::all_ones;
  if (name == "exp1") return WeightPreset::exponential;
  if (name == "unif01") return WeightPreset::uniform01;
  if (name == "unif05-1") return WeightPreset::uniform_half_one;
  throw ConfigError("unknown weight preset '" + std::string(name) + "'");
}

WeightMatrix make_weight_preset(WeightPreset preset, std::size_t rows, std::size_t cols,
                                Rng& rng) {
  WeightMatrix w(rows, cols, 1.0);
  if (preset == WeightPreset::all_ones) return w;
  std::exponential_distribution<double> exp1(1.0);
  std::uniform_real_distribution<double> unif01(0.0, 1.0);
  std::uniform_real_distribution<double> unif_half(0.5, 1.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double v = 1.0;
      switch (preset) {
        case WeightPreset::exponential:
          do v = exp1(rng); while (v == 0.0);
          break;
        case WeightPreset::uniform01:
          do v = unif01(rng); while (v == 0.0);
          break;
        case WeightPreset::uniform_half_one:
          v = unif_half(rng);
          break;
        case WeightPreset::all_ones:
          break;
      }
      w.set(i, j, v);
    }
  }
  return w;
}

void install_random_zeros(WeightMatrix& w, double p, Rng& rng) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (bernoulli(rng, p)) w.set(i, j, 0.0);
    }
  }
}

std::size_t install_triangle_zeros(WeightMatrix& w, double fraction) {
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  const double target = fraction * static_cast<double>(m * n);
  auto covered = [&](std::size_t t) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((m - 1 - i) + j < t) ++count;
      }
    }
    return count;
  };
  std::size_t best_t = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t <= m + n; ++t) {
    const double gap = std::abs(static_cast<double>(covered(t)) - target);
    if (gap < best_gap) {
      best_gap = gap;
      best_t = t;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((m - 1 - i) + j < best_t) w.set(i, j, 0.0);
    }
  }
  return best_t;
}

BinaryMatrix random_binary_matrix(std::size_t rows, std::size_t cols, double density,
                                  Rng& rng, const WeightMatrix* mask) {
  if (mask && (mask->rows() != rows || mask->cols() != cols)) {
    throw DimensionError("mask shape does not match requested matrix");
  }
  BinaryMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (bernoulli(rng, density)) a.set(i, j, true);
    }
  }
  if (mask) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (mask->is_zero(i, j)) a.set(i, j, false);
      }
    }
  }
  return a;
}

WeightMatrix diagonal_decay_weights(std::size_t n, double scale) {
  if (n > 0 && scale <= static_cast<double>(n - 1)) {
    throw Error("diagonal decay scale must exceed n - 1");
  }
  WeightMatrix w(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = i > j ? static_cast<double>(i - j) : static_cast<double>(j - i);
      w.set(i, j, (scale - d) / scale);
    }
  }
  return w;
}

}  // namespace wfm
