#pragma once

#include <cmath>
#include <vector>

#include "wfm/error.hpp"

namespace wfm {

/// Nonnegative finite weights; a weight of exactly 0 is a structural zero.
/// Log-weights are cached alongside (-inf for structural zeros).
class WeightMatrix {
 public:
  WeightMatrix() = default;
  /// Constant-valued matrix.
  WeightMatrix(std::size_t rows, std::size_t cols, double value = 1.0);

  static WeightMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static WeightMatrix ones(std::size_t rows, std::size_t cols) {
    return WeightMatrix(rows, cols, 1.0);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double at(std::size_t i, std::size_t j) const noexcept {
    return weights_[i * cols_ + j];
  }
  double log_at(std::size_t i, std::size_t j) const noexcept {
    return log_weights_[i * cols_ + j];
  }
  bool is_zero(std::size_t i, std::size_t j) const noexcept {
    return weights_[i * cols_ + j] == 0.0;
  }

  void set(std::size_t i, std::size_t j, double value);

  /// Every (i, j) with w_ij == 0, in row-major order.
  std::vector<Cell> zero_pattern() const;
  bool has_zeros() const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
};

}  // namespace wfm
