#include "wfm/swap_sampler.hpp"

#include <string>

namespace wfm {

double swap_probability(const WeightMatrix& w, std::size_t i, std::size_t j,
                        std::size_t i2, std::size_t j2) {
  if (i == i2 || j == j2) {
    throw Error("swap requires distinct rows and columns");
  }
  const double stay = w.at(i, j) * w.at(i2, j2);
  const double move = w.at(i2, j) * w.at(i, j2);
  const double total = stay + move;
  if (total == 0.0) {
    throw Error("swap probability undefined: both diagonal weight products are zero");
  }
  return move / total;
}

SwapProposal make_swap_proposal(const BinaryMatrix& a, const WeightMatrix& w,
                                Cell first, Cell second) {
  SwapProposal p{first, second, false, 0.0};
  if (first.row == second.row || first.col == second.col) return p;
  if (a.at(second.row, first.col) || a.at(first.row, second.col)) return p;
  p.is_checkerboard = true;
  p.swap_probability = swap_probability(w, first.row, first.col, second.row, second.col);
  return p;
}

void apply_swap(BinaryMatrix& a, const SwapProposal& p) {
  a.set(p.first.row, p.first.col, false);
  a.set(p.second.row, p.second.col, false);
  a.set(p.second.row, p.first.col, true);
  a.set(p.first.row, p.second.col, true);
}

StepOutcome swap_step(BinaryMatrix& a, const WeightMatrix& w, Rng& rng) {
  const std::size_t k = a.total_ones();
  if (k < 2) return StepOutcome::no_move;
  const auto [x, y] = distinct_pair(rng, k);
  const SwapProposal p = make_swap_proposal(a, w, a.ones()[x], a.ones()[y]);
  if (!p.is_checkerboard) return StepOutcome::no_move;
  if (!bernoulli(rng, p.swap_probability)) return StepOutcome::rejected;
  apply_swap(a, p);
  return StepOutcome::accepted;
}

}  // namespace wfm
