#include "wfm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "wfm/curveball_sampler.hpp"
#include "wfm/swap_sampler.hpp"

namespace wfm {

std::optional<std::size_t> EnumeratedSpace::find(const BinaryMatrix& a) const {
  if (a.rows() != margins.rows.size() || a.cols() != margins.cols.size()) {
    return std::nullopt;
  }
  const auto it = index.find(a.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool margins_feasible(std::vector<std::size_t> row_sums, const std::vector<std::size_t>& col_sums) {
  const std::size_t total_r = std::accumulate(row_sums.begin(), row_sums.end(), std::size_t{0});
  const std::size_t total_c = std::accumulate(col_sums.begin(), col_sums.end(), std::size_t{0});
  if (total_r != total_c) return false;
  std::sort(row_sums.begin(), row_sums.end(), std::greater<>());
  std::size_t lhs = 0;
  for (std::size_t k = 1; k <= row_sums.size(); ++k) {
    lhs += row_sums[k - 1];
    std::size_t rhs = 0;
    for (std::size_t c : col_sums) rhs += std::min(c, k);
    if (lhs > rhs) return false;
  }
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c,
             const WeightMatrix& w, std::size_t cap, EnumeratedSpace& out)
      : r_(r), remaining_(c), w_(w), cap_(cap), out_(out), current_(r.size(), c.size()) {}

  void run() { fill_row(0); }

 private:
  void fill_row(std::size_t i) {
    if (i == r_.size()) {
      if (std::any_of(remaining_.begin(), remaining_.end(), [](std::size_t v) { return v; })) {
        return;
      }
      if (out_.states.size() >= cap_) throw SpaceTooLarge(cap_);
      out_.states.push_back(current_);
      return;
    }
    choose(i, 0, r_[i]);
  }

  // Places `left` more 1s in row i at columns >= j.
  void choose(std::size_t i, std::size_t j, std::size_t left) {
    if (left == 0) {
      if (rest_feasible(i + 1)) fill_row(i + 1);
      return;
    }
    const std::size_t n = remaining_.size();
    for (std::size_t col = j; col + left <= n; ++col) {
      if (remaining_[col] == 0 || w_.is_zero(i, col)) continue;
      --remaining_[col];
      current_.set(i, col, true);
      choose(i, col + 1, left - 1);
      current_.set(i, col, false);
      ++remaining_[col];
    }
  }

  bool rest_feasible(std::size_t from_row) const {
    std::vector<std::size_t> rest(r_.begin() + static_cast<std::ptrdiff_t>(from_row), r_.end());
    return margins_feasible(std::move(rest), remaining_);
  }

  const std::vector<std::size_t>& r_;
  std::vector<std::size_t> remaining_;
  const WeightMatrix& w_;
  std::size_t cap_;
  EnumeratedSpace& out_;
  BinaryMatrix current_;
};

void normalise(EnumeratedSpace& space) {
  const std::size_t count = space.states.size();
  space.log_weights.resize(count);
  for (std::size_t s = 0; s < count; ++s) {
    double lw = 0.0;
    for (const Cell& c : space.states[s].ones()) lw += space.weights.log_at(c.row, c.col);
    space.log_weights[s] = lw;
  }
  space.probabilities.assign(count, 0.0);
  if (count == 0) {
    space.kappa = 0.0;
    space.log_kappa = -std::numeric_limits<double>::infinity();
    return;
  }
  const double top = *std::max_element(space.log_weights.begin(), space.log_weights.end());
  double total = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    space.probabilities[s] = std::exp(space.log_weights[s] - top);
    total += space.probabilities[s];
  }
  for (double& p : space.probabilities) p /= total;
  space.log_kappa = top + std::log(total);
  space.kappa = std::exp(space.log_kappa);
}

}  // namespace

EnumeratedSpace enumerate_space(const std::vector<std::size_t>& row_sums,
                                const std::vector<std::size_t>& col_sums,
                                const WeightMatrix& w, std::size_t cap) {
  if (w.rows() != row_sums.size() || w.cols() != col_sums.size()) {
    throw DimensionError("weight matrix is " + std::to_string(w.rows()) + "x" +
                         std::to_string(w.cols()) + " but margins describe " +
                         std::to_string(row_sums.size()) + "x" +
                         std::to_string(col_sums.size()));
  }
  EnumeratedSpace space;
  space.margins = {row_sums, col_sums};
  space.weights = w;
  if (margins_feasible(row_sums, col_sums)) {
    Enumerator(row_sums, col_sums, w, cap, space).run();
  }
  for (std::size_t s = 0; s < space.states.size(); ++s) {
    space.index.emplace(space.states[s].key(), s);
  }
  normalise(space);
  return space;
}

EnumeratedSpace enumerate_space(const BinaryMatrix& a, const WeightMatrix& w, std::size_t cap) {
  return enumerate_space(a.row_sums(), a.col_sums(), w, cap);
}

double TransitionKernel::at(std::size_t from, std::size_t to) const {
  const auto& row = rows[from];
  const auto it = std::lower_bound(row.begin(), row.end(), to,
                                   [](const auto& e, std::size_t t) { return e.first < t; });
  return it != row.end() && it->first == to ? it->second : 0.0;
}

namespace {

std::size_t lookup(const EnumeratedSpace& space, const BinaryMatrix& a) {
  const auto idx = space.find(a);
  if (!idx) throw Error("kernel move left the enumerated space (sampler bug)");
  return *idx;
}

void swap_row(const EnumeratedSpace& space, std::size_t s,
              std::map<std::size_t, double>& row) {
  const BinaryMatrix& a = space.states[s];
  const std::size_t k = a.total_ones();
  if (k < 2) {
    row[s] += 1.0;
    return;
  }
  const double pair_prob = 2.0 / (static_cast<double>(k) * static_cast<double>(k - 1));
  const auto& ones = a.ones();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      const SwapProposal p = make_swap_proposal(a, space.weights, ones[x], ones[y]);
      if (!p.is_checkerboard) {
        row[s] += pair_prob;
        continue;
      }
      if (p.swap_probability > 0.0) {
        BinaryMatrix b = a;
        apply_swap(b, p);
        row[lookup(space, b)] += pair_prob * p.swap_probability;
      }
      row[s] += pair_prob * (1.0 - p.swap_probability);
    }
  }
}

double binomial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out;
}

void curveball_row(const EnumeratedSpace& space, std::size_t s,
                   std::map<std::size_t, double>& row) {
  const BinaryMatrix& a = space.states[s];
  const std::size_t m = a.rows();
  if (m < 2) {
    row[s] += 1.0;
    return;
  }
  const double pair_prob = 2.0 / (static_cast<double>(m) * static_cast<double>(m - 1));
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const TradeProposal cand = trade_candidates(a, space.weights, u, v);
      if (!cand.tradeable()) {
        row[s] += pair_prob;
        continue;
      }
      const std::size_t na = cand.candidates_row.size();
      const std::size_t total = na + cand.candidates_other.size();
      if (total > 30) throw Error("curveball kernel: trade too large to enumerate");
      const double split_prob = pair_prob / binomial(total, na);
      // Each mask with na bits set marks the list entries that end up in row u.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != na) continue;
        std::vector<std::size_t> to_u, to_v;
        for (std::size_t idx = 0; idx < total; ++idx) {
          const bool in_u = (mask >> idx) & 1U;
          if (in_u && idx >= na) to_u.push_back(cand.candidates_other[idx - na]);
          if (!in_u && idx < na) to_v.push_back(cand.candidates_row[idx]);
        }
        if (to_u.empty() && to_v.empty()) {
          row[s] += split_prob;
          continue;
        }
        const double p = trade_probability(space.weights, u, v, to_u, to_v);
        if (p > 0.0) {
          BinaryMatrix b = a;
          apply_trade(b, u, v, to_u, to_v);
          row[lookup(space, b)] += split_prob * p;
        }
        row[s] += split_prob * (1.0 - p);
      }
    }
  }
}

}  // namespace

TransitionKernel exact_kernel(const EnumeratedSpace& space, Algorithm algorithm) {
  TransitionKernel k;
  k.rows.resize(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    std::map<std::size_t, double> row;
    if (algorithm == Algorithm::swap) {
      swap_row(space, s, row);
    } else {
      curveball_row(space, s, row);
    }
    k.rows[s].assign(row.begin(), row.end());
  }
  return k;
}

double row_sum_residual(const TransitionKernel& k) {
  double worst = 0.0;
  for (const auto& row : k.rows) {
    double sum = 0.0;
    for (const auto& [t, p] : row) sum += p;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double detailed_balance_residual(const EnumeratedSpace& space, const TransitionKernel& k) {
  double worst = 0.0;
  for (std::size_t s = 0; s < k.size(); ++s) {
    for (const auto& [t, p] : k.rows[s]) {
      if (t == s) continue;
      const double flow = space.probabilities[s] * p;
      const double back = space.probabilities[t] * k.at(t, s);
      worst = std::max(worst, std::abs(flow - back));
    }
  }
  return worst;
}

double stationarity_residual(const EnumeratedSpace& space, const TransitionKernel& k) {
  std::vector<double> next(k.size(), 0.0);
  for (std::size_t s = 0; s < k.size(); ++s) {
    for (const auto& [t, p] : k.rows[s]) next[t] += space.probabilities[s] * p;
  }
  double worst = 0.0;
  for (std::size_t t = 0; t < k.size(); ++t) {
    worst = std::max(worst, std::abs(next[t] - space.probabilities[t]));
  }
  return worst;
}

std::vector<std::vector<std::size_t>> connected_components(const TransitionKernel& k) {
  const std::size_t n = k.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& [t, p] : k.rows[s]) {
      if (t != s && p > 0.0) {
        adj[s].push_back(t);
        adj[t].push_back(s);
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t s = stack.back();
      stack.pop_back();
      comp.push_back(s);
      for (std::size_t t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<std::vector<std::size_t>> connectivity(const EnumeratedSpace& space,
                                                   Algorithm algorithm) {
  return connected_components(exact_kernel(space, algorithm));
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const TransitionKernel& k, std::size_t from) {
  std::vector<std::size_t> dist(k.size(), kUnreached);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& [t, p] : k.rows[s]) {
      if (p > 0.0 && dist[t] == kUnreached) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> min_moves(const TransitionKernel& k, std::size_t from,
                                     std::size_t to) {
  const std::size_t d = bfs_distances(k, from)[to];
  if (d == kUnreached) return std::nullopt;
  return d;
}

std::optional<std::size_t> min_swaps(const EnumeratedSpace& space, const BinaryMatrix& a,
                                     const BinaryMatrix& b, Algorithm algorithm) {
  const auto ia = space.find(a);
  const auto ib = space.find(b);
  if (!ia || !ib) throw Error("min_swaps: matrix is not a state of the space");
  if (*ia == *ib) return 0;
  return min_moves(exact_kernel(space, algorithm), *ia, *ib);
}

std::size_t diameter(const TransitionKernel& k) {
  std::size_t worst = 0;
  for (std::size_t s = 0; s < k.size(); ++s) {
    for (std::size_t d : bfs_distances(k, s)) {
      if (d == kUnreached) throw DisconnectedSpace("diameter undefined: space is disconnected");
      worst = std::max(worst, d);
    }
  }
  return worst;
}

std::size_t diameter(const EnumeratedSpace& space, Algorithm algorithm) {
  return diameter(exact_kernel(space, algorithm));
}

std::size_t max_pairwise_hamming(const EnumeratedSpace& space) {
  std::size_t worst = 0;
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (std::size_t t = s + 1; t < space.size(); ++t) {
      worst = std::max(worst, hamming_distance(space.states[s], space.states[t]));
    }
  }
  return worst;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DimensionError("distribution lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DimensionError("distribution lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

EmpiricalReport empirical_distribution(std::span<const BinaryMatrix> samples,
                                       const EnumeratedSpace& space) {
  if (samples.empty()) throw Error("empirical distribution needs at least one sample");
  EmpiricalReport report;
  report.counts.assign(space.size(), 0);
  for (const auto& a : samples) {
    const auto idx = space.find(a);
    if (!idx) throw Error("sampled matrix is not a state of the enumerated space");
    ++report.counts[*idx];
  }
  report.frequencies.resize(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    report.frequencies[s] =
        static_cast<double>(report.counts[s]) / static_cast<double>(samples.size());
  }
  report.kl_divergence = kl_divergence(report.frequencies, space.probabilities);
  report.total_variation = total_variation(report.frequencies, space.probabilities);
  return report;
}

}  // namespace wfm
