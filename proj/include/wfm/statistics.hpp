#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/binary_matrix.hpp"

namespace wfm {

/// Mean normalised distance of the 1s from the main diagonal:
/// sum |i - j| over 1-entries divided by (number of 1s * n). Requires a
/// square matrix with at least one 1; the result lies in [0, (n-1)/n].
double diagonal_divergence(const BinaryMatrix& a);

/// Stone-Roberts C-score, 2/(m(m-1)) * sum_{i<j} (r_i - S_ij)(r_j - S_ij),
/// with S_ij the number of columns shared by rows i and j. Requires m >= 2.
double c_score(const BinaryMatrix& a);

struct StatisticSpec {
  std::string name;
  bool requires_square = false;
  std::function<double(const BinaryMatrix&)> evaluate;
};

/// Registered statistics: "diag-divergence" (square only) and "c-score".
const std::vector<StatisticSpec>& statistic_registry();
/// Throws ConfigError for an unknown name.
const StatisticSpec& find_statistic(std::string_view name);
/// Throws ConfigError if a statistic cannot be evaluated on an m x n matrix.
void check_statistic_applicable(const StatisticSpec& spec, std::size_t rows,
                                std::size_t cols);

}  // namespace wfm
