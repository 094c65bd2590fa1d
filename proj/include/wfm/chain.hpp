#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/binary_matrix.hpp"
#include "wfm/step.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

/// Burn-in and thinning are counted in proposals, not accepted moves.
struct ChainConfig {
  Algorithm algorithm = Algorithm::swap;
  std::uint64_t burn_in = 0;
  std::uint64_t thin = 1;
  std::uint64_t retained = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> statistics;
  bool keep_matrices = false;

  /// Throws ConfigError unless thin >= 1, retained >= 1 and every statistic
  /// name is registered.
  void validate() const;
  friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

struct ChainCounters {
  std::uint64_t proposals = 0;
  std::uint64_t no_moves = 0;
  std::uint64_t rejections = 0;
  std::uint64_t acceptances = 0;
  friend bool operator==(const ChainCounters&, const ChainCounters&) = default;
};

struct Trace {
  ChainConfig config;
  std::vector<std::uint64_t> iterations;    // proposal count at each snapshot
  std::vector<std::vector<double>> values;  // parallel to config.statistics
  std::vector<BinaryMatrix> matrices;       // filled when keep_matrices
  ChainCounters counters;
  bool degenerate = false;  // swap chain with fewer than two 1s never moves

  /// Values recorded for a statistic; throws ConfigError if not recorded.
  const std::vector<double>& values_of(std::string_view name) const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Runs burn_in proposals, then records a snapshot after every `thin`
/// proposals until `retained` snapshots exist. Deterministic in
/// (initial, w, config).
Trace run_chain(const BinaryMatrix& initial, const WeightMatrix& w, const ChainConfig& config);

/// Runs n_chains independent chains; chain i is seeded with
/// derive_chain_seed(config.seed, i). Chains run on up to max_threads
/// threads (0 = hardware concurrency); results do not depend on threading.
std::vector<Trace> run_ensemble(const BinaryMatrix& initial, const WeightMatrix& w,
                                const ChainConfig& config, std::size_t n_chains,
                                std::size_t max_threads = 0);

/// Parses key=value lines ('#' comments). Keys: algorithm, burn_in, thin,
/// samples (or retained), seed, stats (comma separated), keep_matrices.
/// Dashes and underscores in keys are interchangeable.
ChainConfig read_chain_config(std::istream& in, ChainConfig base = {});
void set_chain_config_entry(ChainConfig& config, std::string_view key, std::string_view value);

std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace wfm
