#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wfm/binary_matrix.hpp"
#include "wfm/matrix_ops.hpp"
#include "wfm/step.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// Every positive-probability matrix with the given margins, together with
/// its exact probability prod w_ij^a_ij / kappa.
struct EnumeratedSpace {
  Margins margins;
  WeightMatrix weights;
  std::vector<BinaryMatrix> states;
  std::vector<double> log_weights;  // log prod w_ij^a_ij per state
  std::vector<double> probabilities;
  double kappa = 0.0;
  double log_kappa = 0.0;

  std::size_t size() const noexcept { return states.size(); }
  bool empty() const noexcept { return states.empty(); }
  std::optional<std::size_t> find(const BinaryMatrix& a) const;

  std::unordered_map<std::string, std::size_t> index;
};

/// Row-by-row backtracking with Gale-Ryser pruning of the remaining column
/// sums. Infeasible margins give an empty space; more than `cap` states
/// throws SpaceTooLarge.
EnumeratedSpace enumerate_space(const std::vector<std::size_t>& row_sums,
                                const std::vector<std::size_t>& col_sums,
                                const WeightMatrix& w, std::size_t cap = kDefaultStateCap);
EnumeratedSpace enumerate_space(const BinaryMatrix& a, const WeightMatrix& w,
                                std::size_t cap = kDefaultStateCap);

/// Gale-Ryser test (structural zeros ignored).
bool margins_feasible(std::vector<std::size_t> row_sums, const std::vector<std::size_t>& col_sums);

/// Sparse row-stochastic one-step transition matrix over a space's states.
struct TransitionKernel {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;  // sorted by target

  std::size_t size() const noexcept { return rows.size(); }
  double at(std::size_t from, std::size_t to) const;
};

/// Exact kernel of one sampler step, built by enumerating every proposal the
/// step can make from each state with its probability.
TransitionKernel exact_kernel(const EnumeratedSpace& space, Algorithm algorithm);

/// max_s |sum_t K(s,t) - 1|
double row_sum_residual(const TransitionKernel& k);
/// max over s, t of |P(s) K(s,t) - P(t) K(t,s)|
double detailed_balance_residual(const EnumeratedSpace& space, const TransitionKernel& k);
/// max_t |(P K)(t) - P(t)|
double stationarity_residual(const EnumeratedSpace& space, const TransitionKernel& k);

/// Components of the undirected graph joining s != t when K(s,t) > 0. Each
/// component lists state indices in increasing order; components are ordered
/// by their smallest member.
std::vector<std::vector<std::size_t>> connected_components(const TransitionKernel& k);
std::vector<std::vector<std::size_t>> connectivity(const EnumeratedSpace& space,
                                                   Algorithm algorithm);

/// Fewest positive-probability moves from state index `from` to `to`.
std::optional<std::size_t> min_moves(const TransitionKernel& k, std::size_t from, std::size_t to);
/// Fewest moves between two matrices; throws if either is not in the space.
std::optional<std::size_t> min_swaps(const EnumeratedSpace& space, const BinaryMatrix& a,
                                     const BinaryMatrix& b,
                                     Algorithm algorithm = Algorithm::swap);

/// Largest min_moves over all state pairs; throws DisconnectedSpace.
std::size_t diameter(const TransitionKernel& k);
std::size_t diameter(const EnumeratedSpace& space, Algorithm algorithm);

std::size_t max_pairwise_hamming(const EnumeratedSpace& space);

struct EmpiricalReport {
  std::vector<std::size_t> counts;
  std::vector<double> frequencies;
  double kl_divergence = 0.0;  // KL(empirical || exact)
  double total_variation = 0.0;
};

/// Tallies sampled matrices against the space; throws if a sample is not a
/// state of the space.
EmpiricalReport empirical_distribution(std::span<const BinaryMatrix> samples,
                                       const EnumeratedSpace& space);

/// sum p log(p / q) over p > 0; infinite if q vanishes where p does not.
double kl_divergence(std::span<const double> p, std::span<const double> q);
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace wfm
