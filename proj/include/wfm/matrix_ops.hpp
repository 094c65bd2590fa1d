#pragma once

#include <vector>

#include "wfm/binary_matrix.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

struct Margins {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  friend bool operator==(const Margins&, const Margins&) = default;
};

/// Recounts row and column sums from the cell storage.
Margins compute_margins(const BinaryMatrix& a);

struct Compatibility {
  bool valid = true;
  std::vector<Cell> violations;  // every (i, j) with a_ij = 1 and w_ij = 0
};

/// Throws DimensionError when the shapes differ.
Compatibility check_compatibility(const BinaryMatrix& a, const WeightMatrix& w);

/// Throws IncompatibleMatrix listing the violating cells.
void require_compatible(const BinaryMatrix& a, const WeightMatrix& w);

/// Outcome of the structural-zero monotonicity test. When monotonic,
/// position p of the permuted matrix holds original row row_order[p]
/// (likewise for columns), and in the permuted matrix every zero has only
/// zeros above it and to its left.
struct MonotonicReport {
  bool is_monotonic = false;
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
};

MonotonicReport is_monotonic(const WeightMatrix& w);

std::size_t hamming_distance(const BinaryMatrix& a, const BinaryMatrix& b);

/// Elementwise w_ij^power. Power 0 yields all ones (including at zeros);
/// a negative power on a zero weight throws.
WeightMatrix apply_power(const WeightMatrix& w, double power);

}  // namespace wfm
