#include "wfm/matrix_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace wfm {

namespace {

void require_same_shape(std::size_t m1, std::size_t n1, std::size_t m2,
                        std::size_t n2) {
  if (m1 != m2 || n1 != n2) {
    throw DimensionError("dimension mismatch: " + std::to_string(m1) + "x" +
                         std::to_string(n1) + " vs " + std::to_string(m2) + "x" +
                         std::to_string(n2));
  }
}

std::vector<std::size_t> order_by_descending(const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> order(counts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return counts[a] > counts[b];
  });
  return order;
}

}  // namespace

Margins compute_margins(const BinaryMatrix& a) {
  Margins out{std::vector<std::size_t>(a.rows(), 0),
              std::vector<std::size_t>(a.cols(), 0)};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j)) {
        ++out.rows[i];
        ++out.cols[j];
      }
    }
  }
  return out;
}

Compatibility check_compatibility(const BinaryMatrix& a, const WeightMatrix& w) {
  require_same_shape(a.rows(), a.cols(), w.rows(), w.cols());
  Compatibility result;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) && w.is_zero(i, j)) result.violations.push_back({i, j});
    }
  }
  result.valid = result.violations.empty();
  return result;
}

void require_compatible(const BinaryMatrix& a, const WeightMatrix& w) {
  auto compat = check_compatibility(a, w);
  if (!compat.valid) {
    throw IncompatibleMatrix(
        "matrix has " + std::to_string(compat.violations.size()) +
            " one(s) on structural zeros",
        std::move(compat.violations));
  }
}

// Zero sets are permutable into a top-left staircase iff the row zero sets
// form a chain under inclusion; sorting rows and columns by zero count then
// produces the staircase whenever one exists.
MonotonicReport is_monotonic(const WeightMatrix& w) {
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  std::vector<std::size_t> row_zeros(m, 0), col_zeros(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w.is_zero(i, j)) {
        ++row_zeros[i];
        ++col_zeros[j];
      }
    }
  }
  MonotonicReport report;
  report.row_order = order_by_descending(row_zeros);
  report.col_order = order_by_descending(col_zeros);
  report.is_monotonic = true;
  for (std::size_t p = 0; p < m && report.is_monotonic; ++p) {
    const std::size_t i = report.row_order[p];
    for (std::size_t q = 0; q < n; ++q) {
      const bool expect_zero = q < row_zeros[i];
      if (w.is_zero(i, report.col_order[q]) != expect_zero) {
        report.is_monotonic = false;
        break;
      }
    }
  }
  if (!report.is_monotonic) {
    report.row_order.clear();
    report.col_order.clear();
  }
  return report;
}

std::size_t hamming_distance(const BinaryMatrix& a, const BinaryMatrix& b) {
  require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) ++d;
    }
  }
  return d;
}

WeightMatrix apply_power(const WeightMatrix& w, double power) {
  if (!std::isfinite(power)) throw Error("weight power must be finite");
  WeightMatrix out(w.rows(), w.cols(), 1.0);
  if (power == 0.0) return out;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const double v = w.at(i, j);
      if (v == 0.0 && power < 0.0) {
        throw Error("negative power applied to structural zero at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      out.set(i, j, power == 1.0 ? v : std::pow(v, power));
    }
  }
  return out;
}

}  // namespace wfm
