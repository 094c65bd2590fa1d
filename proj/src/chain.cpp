#include "wfm/chain.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <istream>
#include <thread>

#include "wfm/curveball_sampler.hpp"
#include "wfm/matrix_ops.hpp"
#include "wfm/rng.hpp"
#include "wfm/statistics.hpp"
#include "wfm/swap_sampler.hpp"

namespace wfm {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::swap ? "swap" : "curveball";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "swap") return Algorithm::swap;
  if (name == "curveball") return Algorithm::curveball;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected swap or curveball)");
}

void ChainConfig::validate() const {
  if (thin < 1) throw ConfigError("thin must be at least 1");
  if (retained < 1) throw ConfigError("retained sample count must be at least 1");
  for (const auto& name : statistics) find_statistic(name);
}

const std::vector<double>& Trace::values_of(std::string_view name) const {
  for (std::size_t s = 0; s < config.statistics.size(); ++s) {
    if (config.statistics[s] == name) return values[s];
  }
  throw ConfigError("statistic '" + std::string(name) + "' was not recorded");
}

Trace run_chain(const BinaryMatrix& initial, const WeightMatrix& w, const ChainConfig& config) {
  config.validate();
  require_compatible(initial, w);
  std::vector<const StatisticSpec*> stats;
  for (const auto& name : config.statistics) {
    const auto& spec = find_statistic(name);
    check_statistic_applicable(spec, initial.rows(), initial.cols());
    stats.push_back(&spec);
  }
  if (config.algorithm == Algorithm::curveball && initial.rows() < 2) {
    throw ConfigError("curveball requires at least two rows");
  }

  Trace trace;
  trace.config = config;
  trace.values.assign(stats.size(), {});
  for (auto& v : trace.values) v.reserve(config.retained);
  trace.iterations.reserve(config.retained);
  trace.degenerate = config.algorithm == Algorithm::swap && initial.total_ones() < 2;

  BinaryMatrix state = initial;
  Rng rng(config.seed);
  auto& counters = trace.counters;
  auto propose = [&] {
    const StepOutcome outcome = config.algorithm == Algorithm::swap
                                    ? swap_step(state, w, rng)
                                    : curveball_step(state, w, rng);
    ++counters.proposals;
    switch (outcome) {
      case StepOutcome::no_move: ++counters.no_moves; break;
      case StepOutcome::rejected: ++counters.rejections; break;
      case StepOutcome::accepted: ++counters.acceptances; break;
    }
  };

  for (std::uint64_t k = 0; k < config.burn_in; ++k) propose();
  for (std::uint64_t s = 0; s < config.retained; ++s) {
    for (std::uint64_t k = 0; k < config.thin; ++k) propose();
    trace.iterations.push_back(counters.proposals);
    for (std::size_t q = 0; q < stats.size(); ++q) {
      trace.values[q].push_back(stats[q]->evaluate(state));
    }
    if (config.keep_matrices) trace.matrices.push_back(state);
  }
  return trace;
}

std::vector<Trace> run_ensemble(const BinaryMatrix& initial, const WeightMatrix& w,
                                const ChainConfig& config, std::size_t n_chains,
                                std::size_t max_threads) {
  if (n_chains < 1) throw ConfigError("ensemble needs at least one chain");
  config.validate();
  require_compatible(initial, w);

  std::vector<Trace> traces(n_chains);
  std::vector<std::exception_ptr> errors(n_chains);
  auto run_one = [&](std::size_t i) {
    try {
      ChainConfig c = config;
      c.seed = derive_chain_seed(config.seed, i);
      traces[i] = run_chain(initial, w, c);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  std::size_t workers = max_threads == 0 ? std::thread::hardware_concurrency() : max_threads;
  workers = std::clamp<std::size_t>(workers, 1, n_chains);
  if (workers == 1) {
    for (std::size_t i = 0; i < n_chains; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n_chains; i += workers) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return traces;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

namespace {

std::uint64_t parse_count(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void set_chain_config_entry(ChainConfig& config, std::string_view raw_key,
                            std::string_view value) {
  std::string key(raw_key);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "algorithm") {
    config.algorithm = parse_algorithm(value);
  } else if (key == "burn_in") {
    config.burn_in = parse_count(key, value);
  } else if (key == "thin") {
    config.thin = parse_count(key, value);
  } else if (key == "samples" || key == "retained") {
    config.retained = parse_count(key, value);
  } else if (key == "seed") {
    config.seed = parse_count(key, value);
  } else if (key == "stats" || key == "statistics") {
    config.statistics = split_list(value);
  } else if (key == "keep_matrices") {
    config.keep_matrices = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(raw_key) + "'");
  }
}

ChainConfig read_chain_config(std::istream& in, ChainConfig base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    set_chain_config_entry(base, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return base;
}

}  // namespace wfm
