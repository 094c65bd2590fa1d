#pragma once

#include <span>
#include <vector>

#include "wfm/binary_matrix.hpp"
#include "wfm/rng.hpp"
#include "wfm/step.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

/// A proposed trade of 1s between two rows.
///
/// candidates_row holds columns with a 1 in `row`, a 0 in `other_row` and a
/// positive weight at (other_row, j); candidates_other is the mirror image.
/// After the split, moved_to_row are the columns that gain a 1 in `row`
/// (drawn from candidates_other) and moved_to_other those that gain a 1 in
/// `other_row` (drawn from candidates_row). The two have equal size.
struct TradeProposal {
  std::size_t row = 0;
  std::size_t other_row = 0;
  std::vector<std::size_t> candidates_row;
  std::vector<std::size_t> candidates_other;
  std::vector<std::size_t> moved_to_row;
  std::vector<std::size_t> moved_to_other;
  double trade_probability = 0.0;

  bool tradeable() const noexcept {
    return !candidates_row.empty() && !candidates_other.empty();
  }
  bool is_identity() const noexcept {
    return moved_to_row.empty() && moved_to_other.empty();
  }
};

/// Probability of accepting the trade in which `row` gains the columns in
/// to_row and `other_row` gains those in to_other, evaluated as a log-space
/// ratio of weight products. The identity trade (both sets empty) leaves the
/// matrix unchanged whatever the coin says, so it returns 1.
double trade_probability(const WeightMatrix& w, std::size_t row, std::size_t other_row,
                         std::span<const std::size_t> to_row,
                         std::span<const std::size_t> to_other);

/// Fills candidates_row and candidates_other for the row pair.
TradeProposal trade_candidates(const BinaryMatrix& a, const WeightMatrix& w,
                               std::size_t row, std::size_t other_row);

void apply_trade(BinaryMatrix& a, std::size_t row, std::size_t other_row,
                 std::span<const std::size_t> to_row,
                 std::span<const std::size_t> to_other);

/// One weighted curveball proposal: a uniform unordered pair of distinct rows,
/// a uniformly permuted split of their candidate columns, and acceptance with
/// the trade probability. Identity splits count as accepted. Requires at
/// least two rows.
StepOutcome curveball_step(BinaryMatrix& a, const WeightMatrix& w, Rng& rng);

}  // namespace wfm
