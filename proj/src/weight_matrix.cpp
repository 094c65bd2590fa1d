#include "wfm/weight_matrix.hpp"

#include <limits>
#include <string>

namespace wfm {

namespace {

void check_weight(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error("weights must be finite and nonnegative, got " +
                std::to_string(value));
  }
}

double safe_log(double w) {
  return w == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(w);
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols) {
  check_weight(value);
  weights_.assign(rows * cols, value);
  log_weights_.assign(rows * cols, safe_log(value));
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  WeightMatrix w(m, n, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("weight row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) w.set(i, j, rows[i][j]);
  }
  return w;
}

void WeightMatrix::set(std::size_t i, std::size_t j, double value) {
  check_weight(value);
  weights_[i * cols_ + j] = value;
  log_weights_[i * cols_ + j] = safe_log(value);
}

std::vector<Cell> WeightMatrix::zero_pattern() const {
  std::vector<Cell> zeros;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero(i, j)) zeros.push_back({i, j});
    }
  }
  return zeros;
}

bool WeightMatrix::has_zeros() const {
  for (double w : weights_) {
    if (w == 0.0) return true;
  }
  return false;
}

}  // namespace wfm
