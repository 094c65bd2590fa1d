#pragma once

#include "wfm/binary_matrix.hpp"
#include "wfm/rng.hpp"
#include "wfm/step.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

/// Two distinct 1-entries drawn from the ones list. When they form a
/// checkerboard (distinct rows and columns, 0s at the two opposite corners),
/// swap_probability is the chance of moving both 1s to the opposite corners.
struct SwapProposal {
  Cell first;
  Cell second;
  bool is_checkerboard = false;
  double swap_probability = 0.0;
};

/// w_{i'j} w_{ij'} / (w_{ij} w_{i'j'} + w_{i'j} w_{ij'}) for 1s at (i, j) and
/// (i', j'). Throws when the rows or columns coincide, or when both diagonal
/// products vanish.
double swap_probability(const WeightMatrix& w, std::size_t i, std::size_t j,
                        std::size_t i2, std::size_t j2);

SwapProposal make_swap_proposal(const BinaryMatrix& a, const WeightMatrix& w,
                                Cell first, Cell second);

/// Moves the two 1s of a checkerboard proposal to the opposite corners.
void apply_swap(BinaryMatrix& a, const SwapProposal& proposal);

/// One weighted checkerboard-swap proposal: an unordered pair of distinct
/// 1-entries is drawn uniformly, and a checkerboard is swapped with its swap
/// probability. A matrix with fewer than two 1s is left unchanged.
StepOutcome swap_step(BinaryMatrix& a, const WeightMatrix& w, Rng& rng);

}  // namespace wfm
