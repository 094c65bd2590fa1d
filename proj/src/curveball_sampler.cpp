#include "wfm/curveball_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wfm {

double trade_probability(const WeightMatrix& w, std::size_t row, std::size_t other_row,
                         std::span<const std::size_t> to_row,
                         std::span<const std::size_t> to_other) {
  if (to_row.empty() && to_other.empty()) return 1.0;
  double log_after = 0.0;   // log of prod w_{row,j in to_row} * w_{other,j in to_other}
  double log_before = 0.0;  // log of prod w_{other,j in to_row} * w_{row,j in to_other}
  for (std::size_t j : to_row) {
    log_after += w.log_at(row, j);
    log_before += w.log_at(other_row, j);
  }
  for (std::size_t j : to_other) {
    log_after += w.log_at(other_row, j);
    log_before += w.log_at(row, j);
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (log_after == kNegInf && log_before == kNegInf) {
    throw Error("trade probability undefined: both weight products are zero");
  }
  if (log_after == kNegInf) return 0.0;
  if (log_before == kNegInf) return 1.0;
  // after / (after + before) without forming either product
  if (log_after >= log_before) return 1.0 / (1.0 + std::exp(log_before - log_after));
  const double r = std::exp(log_after - log_before);
  return r / (1.0 + r);
}

TradeProposal trade_candidates(const BinaryMatrix& a, const WeightMatrix& w,
                               std::size_t row, std::size_t other_row) {
  TradeProposal p;
  p.row = row;
  p.other_row = other_row;
  const auto r1 = a.row(row);
  const auto r2 = a.row(other_row);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (r1[j] && !r2[j] && !w.is_zero(other_row, j)) p.candidates_row.push_back(j);
    if (r2[j] && !r1[j] && !w.is_zero(row, j)) p.candidates_other.push_back(j);
  }
  return p;
}

void apply_trade(BinaryMatrix& a, std::size_t row, std::size_t other_row,
                 std::span<const std::size_t> to_row,
                 std::span<const std::size_t> to_other) {
  for (std::size_t j : to_row) {
    a.set(row, j, true);
    a.set(other_row, j, false);
  }
  for (std::size_t j : to_other) {
    a.set(row, j, false);
    a.set(other_row, j, true);
  }
}

StepOutcome curveball_step(BinaryMatrix& a, const WeightMatrix& w, Rng& rng) {
  if (a.rows() < 2) throw ConfigError("curveball requires at least two rows");
  const auto [row, other] = distinct_pair(rng, a.rows());
  TradeProposal p = trade_candidates(a, w, row, other);
  if (!p.tradeable()) return StepOutcome::no_move;

  const std::size_t na = p.candidates_row.size();
  const std::size_t total = na + p.candidates_other.size();
  thread_local std::vector<std::size_t> order;
  order.resize(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  // Positions [0, na) of the permuted list are the columns row keeps or gains.
  for (std::size_t pos = 0; pos < total; ++pos) {
    const std::size_t src = order[pos];
    if (pos < na && src >= na) {
      p.moved_to_row.push_back(p.candidates_other[src - na]);
    } else if (pos >= na && src < na) {
      p.moved_to_other.push_back(p.candidates_row[src]);
    }
  }
  if (p.is_identity()) return StepOutcome::accepted;
  p.trade_probability = trade_probability(w, row, other, p.moved_to_row, p.moved_to_other);
  if (!bernoulli(rng, p.trade_probability)) return StepOutcome::rejected;
  apply_trade(a, row, other, p.moved_to_row, p.moved_to_other);
  return StepOutcome::accepted;
}

}  // namespace wfm
