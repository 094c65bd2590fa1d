#include "wfm/statistics.hpp"

#include <cstdlib>

#include "wfm/error.hpp"

namespace wfm {

double diagonal_divergence(const BinaryMatrix& a) {
  if (!a.square()) throw DimensionError("diagonal divergence needs a square matrix");
  if (a.total_ones() == 0) throw Error("diagonal divergence undefined for an all-zero matrix");
  std::size_t sum = 0;
  for (const Cell& c : a.ones()) sum += c.row > c.col ? c.row - c.col : c.col - c.row;
  return static_cast<double>(sum) /
         (static_cast<double>(a.total_ones()) * static_cast<double>(a.cols()));
}

double c_score(const BinaryMatrix& a) {
  const std::size_t m = a.rows();
  if (m < 2) throw DimensionError("C-score needs at least two rows");
  const auto& r = a.row_sums();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto ri = a.row(i);
    for (std::size_t k = i + 1; k < m; ++k) {
      const auto rk = a.row(k);
      std::size_t shared = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) shared += ri[j] & rk[j];
      total += static_cast<double>(r[i] - shared) * static_cast<double>(r[k] - shared);
    }
  }
  return 2.0 * total / (static_cast<double>(m) * static_cast<double>(m - 1));
}

const std::vector<StatisticSpec>& statistic_registry() {
  static const std::vector<StatisticSpec> registry = {
      {"diag-divergence", true, diagonal_divergence},
      {"c-score", false, c_score},
  };
  return registry;
}

const StatisticSpec& find_statistic(std::string_view name) {
  for (const auto& spec : statistic_registry()) {
    if (spec.name == name) return spec;
  }
  throw ConfigError("unknown statistic '" + std::string(name) + "'");
}

void check_statistic_applicable(const StatisticSpec& spec, std::size_t rows,
                                std::size_t cols) {
  if (spec.requires_square && rows != cols) {
    throw ConfigError("statistic '" + spec.name + "' requires a square matrix, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (spec.name == "c-score" && rows < 2) {
    throw ConfigError("statistic 'c-score' requires at least two rows");
  }
}

}  // namespace wfm
