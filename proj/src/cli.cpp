#include "wfm/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wfm/chain.hpp"
#include "wfm/diagnostics.hpp"
#include "wfm/matrix_io.hpp"
#include "wfm/matrix_ops.hpp"
#include "wfm/oracle.hpp"
#include "wfm/statistics.hpp"

namespace wfm {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kKernelTolerance = 1e-12;
constexpr std::size_t kAutoCheckCap = 100'000;

struct InputOptions {
  std::string matrix_path;
  std::string weights_path;
  std::optional<double> weight_power;
  std::string rows;
  std::string cols;
  std::size_t cap = kDefaultStateCap;
};

struct ChainOptions {
  std::string config_path;
  std::string algorithm;
  std::uint64_t burn_in = 0;
  std::uint64_t thin = 1;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  std::string stats;
  std::size_t chains = 1;
  std::size_t threads = 0;
  bool keep_matrices = false;
  std::string out_dir;
  bool strict = false;
};

struct Options {
  InputOptions input;
  ChainOptions chain;
  std::string verify_algorithm = "both";
  std::string statistic = "c-score";
  std::string tail = "upper";
  std::string out_file;
};

// Everything registered on CLI11 plus which flags were set explicitly.
struct ChainFlags {
  CLI::Option* algorithm = nullptr;
  CLI::Option* burn_in = nullptr;
  CLI::Option* thin = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* stats = nullptr;
  CLI::Option* keep = nullptr;
};

std::vector<std::size_t> parse_margin_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError(std::string("invalid ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string(what) + " list is empty");
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Json cells_json(const std::vector<Cell>& cells) {
  Json arr = Json::array();
  for (const Cell& c : cells) arr.push_back(Json::array({c.row, c.col}));
  return arr;
}

WeightMatrix load_weights(const InputOptions& in, std::size_t rows, std::size_t cols) {
  WeightMatrix w = in.weights_path.empty() ? WeightMatrix::ones(rows, cols)
                                           : load_weight_matrix(in.weights_path);
  if (w.rows() != rows || w.cols() != cols) {
    throw DimensionError("weights are " + std::to_string(w.rows()) + "x" +
                         std::to_string(w.cols()) + " but the matrix is " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (in.weight_power) w = apply_power(w, *in.weight_power);
  return w;
}

struct MarginInput {
  Margins margins;
  WeightMatrix weights;
};

MarginInput load_margins(const InputOptions& in) {
  MarginInput result;
  if (!in.matrix_path.empty()) {
    const BinaryMatrix a = load_binary_matrix(in.matrix_path);
    result.margins = {a.row_sums(), a.col_sums()};
  } else if (!in.rows.empty() && !in.cols.empty()) {
    result.margins = {parse_margin_list(in.rows, "row sum"),
                      parse_margin_list(in.cols, "column sum")};
  } else {
    throw ConfigError("give --matrix, or both --rows and --cols");
  }
  result.weights = load_weights(in, result.margins.rows.size(), result.margins.cols.size());
  return result;
}

ChainConfig build_chain_config(const ChainOptions& opts, const ChainFlags& flags,
                               ChainConfig defaults) {
  ChainConfig config = defaults;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw ConfigError("cannot open config file " + opts.config_path);
    config = read_chain_config(in, config);
  }
  if (flags.algorithm && flags.algorithm->count()) config.algorithm = parse_algorithm(opts.algorithm);
  if (flags.burn_in->count()) config.burn_in = opts.burn_in;
  if (flags.thin->count()) config.thin = opts.thin;
  if (flags.samples->count()) config.retained = opts.samples;
  if (flags.seed->count()) config.seed = opts.seed;
  if (flags.stats && flags.stats->count()) config.statistics = split_list(opts.stats);
  if (flags.keep && flags.keep->count()) config.keep_matrices = opts.keep_matrices;
  return config;
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool matrix_required) {
  auto* m = cmd->add_option("--matrix,-m", in.matrix_path, "binary matrix file");
  if (matrix_required) m->required();
  cmd->add_option("--weights,-w", in.weights_path, "weight matrix file (default all ones)");
  cmd->add_option("--weight-power", in.weight_power, "raise every weight to this power");
}

ChainFlags add_chain_options(CLI::App* cmd, ChainOptions& c) {
  ChainFlags f;
  cmd->add_option("--config", c.config_path, "key=value chain configuration file");
  f.algorithm = cmd->add_option("--algorithm,-a", c.algorithm, "swap or curveball");
  f.burn_in = cmd->add_option("--burn-in", c.burn_in, "proposals before the first sample");
  f.thin = cmd->add_option("--thin", c.thin, "proposals between retained samples");
  f.samples = cmd->add_option("--samples", c.samples, "retained samples per chain");
  f.seed = cmd->add_option("--seed", c.seed, "base random seed");
  cmd->add_option("--chains", c.chains, "number of independent chains")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads (0 = hardware concurrency)");
  cmd->add_flag("--strict", c.strict, "refuse weights whose structural zeros are not monotonic");
  return f;
}

// Warns about non-monotonic structural zeros and, when the space is small
// enough, checks whether the chosen sampler can reach every state.
Json reducibility_check(const BinaryMatrix& a, const WeightMatrix& w, Algorithm algorithm,
                        bool strict, std::ostream& err, bool& refuse) {
  Json info;
  refuse = false;
  if (!w.has_zeros()) {
    info["structural_zeros"] = false;
    return info;
  }
  const bool monotonic = is_monotonic(w).is_monotonic;
  info["structural_zeros"] = true;
  info["monotonic"] = monotonic;
  if (monotonic) return info;
  err << "WARNING: structural zeros are not monotonic; the " << to_string(algorithm)
      << " chain may be reducible and fail to reach every matrix\n";
  if (strict) {
    refuse = true;
    return info;
  }
  try {
    const auto space = enumerate_space(a, w, kAutoCheckCap);
    const auto components = connectivity(space, algorithm);
    info["states"] = space.size();
    info["components"] = components.size();
    if (components.size() > 1) {
      err << "WARNING: state space is disconnected (" << components.size()
          << " components); samples are not draws from the target distribution\n";
    } else {
      err << "note: exhaustive check found the state space connected\n";
    }
  } catch (const SpaceTooLarge&) {
    info["components"] = nullptr;
    err << "note: state space exceeds " << kAutoCheckCap
        << " states; connectivity not checked\n";
  }
  return info;
}

Json diagnostics_json(const std::vector<double>& values) {
  const DiagnosticReport d = diagnose(values);
  Json j;
  j["n"] = d.n;
  j["mean"] = d.mean;
  j["sd"] = d.sd;
  if (d.ess) {
    j["ess"] = d.ess->ess;
    j["ess_capped"] = d.ess->capped;
    j["zero_variance"] = d.ess->zero_variance;
  } else {
    j["ess"] = nullptr;
  }
  j["mcse"] = d.mcse ? Json(*d.mcse) : Json(nullptr);
  return j;
}

Json config_json(const ChainConfig& c) {
  Json j;
  j["algorithm"] = std::string(to_string(c.algorithm));
  j["burn_in"] = c.burn_in;
  j["thin"] = c.thin;
  j["samples"] = c.retained;
  j["seed"] = c.seed;
  j["stats"] = c.statistics;
  j["keep_matrices"] = c.keep_matrices;
  return j;
}

void write_trace_csv(const fs::path& path, const Trace& t) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "# algorithm=" << to_string(t.config.algorithm) << '\n'
      << "# seed=" << t.config.seed << '\n'
      << "# burn_in=" << t.config.burn_in << " thin=" << t.config.thin
      << " samples=" << t.config.retained << '\n';
  out << "iteration";
  for (const auto& name : t.config.statistics) out << ',' << name;
  out << '\n';
  for (std::size_t s = 0; s < t.iterations.size(); ++s) {
    out << t.iterations[s];
    for (const auto& v : t.values) out << ',' << format_double(v[s]);
    out << '\n';
  }
}

std::vector<std::string> default_statistics(const BinaryMatrix& a) {
  std::vector<std::string> names;
  if (a.square() && a.total_ones() > 0) names.push_back("diag-divergence");
  if (a.rows() >= 2) names.push_back("c-score");
  return names;
}

int cmd_sample(const Options& o, const ChainFlags& flags, std::ostream& out, std::ostream& err) {
  const BinaryMatrix a = load_binary_matrix(o.input.matrix_path);
  const WeightMatrix w = load_weights(o.input, a.rows(), a.cols());
  ChainConfig defaults;
  defaults.statistics = default_statistics(a);
  const ChainConfig config = build_chain_config(o.chain, flags, defaults);
  config.validate();
  for (const auto& name : config.statistics) {
    check_statistic_applicable(find_statistic(name), a.rows(), a.cols());
  }
  require_compatible(a, w);

  bool refuse = false;
  Json zeros = reducibility_check(a, w, config.algorithm, o.chain.strict, err, refuse);
  if (refuse) {
    err << "error: --strict given and structural zeros are not monotonic\n";
    return kExitInfeasible;
  }

  const auto traces = run_ensemble(a, w, config, o.chain.chains, o.chain.threads);

  const fs::path dir = o.chain.out_dir.empty() ? fs::path("wfm_out") : fs::path(o.chain.out_dir);
  fs::create_directories(dir);
  Json report;
  report["command"] = "sample";
  report["config"] = config_json(config);
  report["chains_requested"] = o.chain.chains;
  report["structural_zeros"] = zeros;
  Json chains = Json::array();
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const Trace& t = traces[i];
    const fs::path csv = dir / ("chain_" + std::to_string(i) + ".csv");
    write_trace_csv(csv, t);
    Json c;
    c["chain"] = i;
    c["seed"] = t.config.seed;
    c["counters"] = {{"proposals", t.counters.proposals},
                     {"acceptances", t.counters.acceptances},
                     {"rejections", t.counters.rejections},
                     {"no_moves", t.counters.no_moves}};
    if (t.degenerate) c["warning"] = "fewer than two 1s: the chain never moves";
    Json stats;
    for (std::size_t s = 0; s < t.config.statistics.size(); ++s) {
      stats[t.config.statistics[s]] = diagnostics_json(t.values[s]);
    }
    c["statistics"] = stats;
    c["trace_file"] = csv.string();
    if (config.keep_matrices) {
      const fs::path mdir = dir / ("chain_" + std::to_string(i) + "_matrices");
      fs::create_directories(mdir);
      for (std::size_t k = 0; k < t.matrices.size(); ++k) {
        std::ostringstream name;
        name << std::setw(6) << std::setfill('0') << k << ".txt";
        save_binary_matrix(mdir / name.str(), t.matrices[k]);
      }
      c["matrix_dir"] = mdir.string();
    }
    chains.push_back(c);
  }
  report["chains"] = chains;
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const MarginInput input = load_margins(o.input);
  const EnumeratedSpace space =
      enumerate_space(input.margins.rows, input.margins.cols, input.weights, o.input.cap);

  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) throw Error("cannot write " + o.out_file);
  }
  std::ostream& csv = o.out_file.empty() ? out : file;
  csv << "# rows=" << join(space.margins.rows) << '\n'
      << "# cols=" << join(space.margins.cols) << '\n'
      << "# states=" << space.size() << '\n'
      << "state,log_weight,probability\n";
  for (std::size_t s = 0; s < space.size(); ++s) {
    csv << space.states[s].key() << ',' << format_double(space.log_weights[s]) << ','
        << format_double(space.probabilities[s]) << '\n';
  }
  if (space.empty()) {
    csv << "# empty space: no matrix satisfies the margins and structural zeros\n"
        << "# kappa=0\n";
    err << "empty space: margins are infeasible under the structural zeros\n";
    return kExitInfeasible;
  }
  csv << "# kappa=" << format_double(space.kappa) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const MarginInput input = load_margins(o.input);
  const EnumeratedSpace space =
      enumerate_space(input.margins.rows, input.margins.cols, input.weights, o.input.cap);
  if (space.empty()) {
    err << "empty space: nothing to verify\n";
    return kExitInfeasible;
  }
  std::vector<Algorithm> algorithms;
  if (o.verify_algorithm == "both") {
    algorithms = {Algorithm::swap, Algorithm::curveball};
  } else {
    algorithms = {parse_algorithm(o.verify_algorithm)};
  }

  const bool monotonic = is_monotonic(input.weights).is_monotonic;
  const std::size_t bound = max_pairwise_hamming(space) / 2;
  bool all_passed = true;
  Json checks = Json::array();
  auto record = [&](Algorithm alg, const char* name, bool passed, Json residual,
                    std::string detail) {
    Json c;
    c["algorithm"] = std::string(to_string(alg));
    c["check"] = name;
    c["passed"] = passed;
    c["residual"] = std::move(residual);
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    all_passed = all_passed && passed;
    err << (passed ? "PASS " : "FAIL ") << to_string(alg) << ' ' << name;
    if (!detail.empty()) err << ": " << detail;
    err << '\n';
  };

  for (Algorithm alg : algorithms) {
    const TransitionKernel k = exact_kernel(space, alg);
    const double rows = row_sum_residual(k);
    const double balance = detailed_balance_residual(space, k);
    const double stationary = stationarity_residual(space, k);
    record(alg, "row-stochastic", rows < kKernelTolerance, rows, "");
    record(alg, "detailed-balance", balance < kKernelTolerance, balance, "");
    record(alg, "stationarity", stationary < kKernelTolerance, stationary, "");
    const auto components = connected_components(k);
    const bool connected = components.size() == 1;
    record(alg, "connectivity", connected, components.size(),
           connected ? "single component"
                     : "disconnected: " + std::to_string(components.size()) +
                           " components; " + std::string(to_string(alg)) +
                           " sampling is invalid for this input");
    if (connected) {
      const std::size_t d = diameter(k);
      if (monotonic) {
        record(alg, "diameter-bound", d <= bound, d,
               "diameter " + std::to_string(d) + " <= " + std::to_string(bound) +
                   " required (half the largest Hamming distance)");
      } else {
        Json c;
        c["algorithm"] = std::string(to_string(alg));
        c["check"] = "diameter-bound";
        c["passed"] = nullptr;
        c["residual"] = d;
        c["detail"] = "skipped: structural zeros are not monotonic";
        checks.push_back(c);
      }
    }
  }

  Json report;
  report["command"] = "verify";
  report["rows"] = space.margins.rows;
  report["cols"] = space.margins.cols;
  report["states"] = space.size();
  report["kappa"] = space.kappa;
  report["monotonic_zeros"] = monotonic;
  report["hamming_bound"] = bound;
  report["checks"] = checks;
  report["passed"] = all_passed;
  out << report.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_nullmodel(const Options& o, const ChainFlags& flags, std::ostream& out,
                  std::ostream& err) {
  const BinaryMatrix a = load_binary_matrix(o.input.matrix_path);
  const WeightMatrix w = load_weights(o.input, a.rows(), a.cols());
  const StatisticSpec& stat = find_statistic(o.statistic);
  check_statistic_applicable(stat, a.rows(), a.cols());
  Tail tail = Tail::upper;
  if (o.tail == "lower") {
    tail = Tail::lower;
  } else if (o.tail != "upper") {
    throw ConfigError("--tail must be upper or lower");
  }

  ChainConfig defaults;
  defaults.algorithm = Algorithm::curveball;
  defaults.burn_in = 1000;
  defaults.thin = 500;
  defaults.retained = 5000;
  ChainConfig config = build_chain_config(o.chain, flags, defaults);
  config.statistics = {stat.name};
  config.keep_matrices = false;
  require_compatible(a, w);

  bool refuse = false;
  Json zeros = reducibility_check(a, w, config.algorithm, o.chain.strict, err, refuse);
  if (refuse) {
    err << "error: --strict given and structural zeros are not monotonic\n";
    return kExitInfeasible;
  }

  const auto traces = run_ensemble(a, w, config, o.chain.chains, o.chain.threads);
  std::vector<double> null_values;
  for (const auto& t : traces) {
    const auto& v = t.values.front();
    null_values.insert(null_values.end(), v.begin(), v.end());
  }
  const double observed = stat.evaluate(a);
  const double p = empirical_p_value(observed, null_values, tail);

  Json report;
  report["command"] = "nullmodel";
  report["config"] = config_json(config);
  report["chains"] = o.chain.chains;
  report["structural_zeros"] = zeros;
  report["statistic"] = stat.name;
  report["observed"] = observed;
  report["tail"] = o.tail;
  report["p_value"] = p;
  report["null"] = diagnostics_json(null_values);
  if (!o.chain.out_dir.empty()) {
    const fs::path dir(o.chain.out_dir);
    fs::create_directories(dir);
    const fs::path csv = dir / ("null_" + stat.name + ".csv");
    std::ofstream f(csv);
    if (!f) throw Error("cannot write " + csv.string());
    f << "# observed=" << format_double(observed) << '\n'
      << "# p_value=" << format_double(p) << " tail=" << o.tail << '\n'
      << "chain,iteration," << stat.name << '\n';
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const auto& t = traces[i];
      for (std::size_t s = 0; s < t.iterations.size(); ++s) {
        f << i << ',' << t.iterations[s] << ',' << format_double(t.values.front()[s]) << '\n';
      }
    }
    report["null_file"] = csv.string();
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted fixed-margin binary matrix sampler"};
  app.require_subcommand(1);
  Options o;

  auto* sample = app.add_subcommand("sample", "run weighted swap or curveball chains");
  add_input_options(sample, o.input, true);
  ChainFlags sample_flags = add_chain_options(sample, o.chain);
  sample_flags.stats = sample->add_option("--stats", o.chain.stats,
                                          "comma-separated statistics (diag-divergence, c-score)");
  sample_flags.keep = sample->add_flag("--keep-matrices", o.chain.keep_matrices,
                                       "write every retained matrix");
  sample->add_option("--out,-o", o.chain.out_dir, "output directory (default wfm_out)");

  auto* enumerate = app.add_subcommand("enumerate", "exact distribution over a small space");
  add_input_options(enumerate, o.input, false);
  enumerate->add_option("--rows", o.input.rows, "comma-separated row sums");
  enumerate->add_option("--cols", o.input.cols, "comma-separated column sums");
  enumerate->add_option("--cap", o.input.cap, "maximum number of states");
  enumerate->add_option("--out,-o", o.out_file, "CSV output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "exact kernel checks on a small space");
  add_input_options(verify, o.input, false);
  verify->add_option("--rows", o.input.rows, "comma-separated row sums");
  verify->add_option("--cols", o.input.cols, "comma-separated column sums");
  verify->add_option("--cap", o.input.cap, "maximum number of states");
  verify->add_option("--algorithm,-a", o.verify_algorithm, "swap, curveball or both");

  auto* nullmodel = app.add_subcommand("nullmodel", "empirical p-value of an observed matrix");
  add_input_options(nullmodel, o.input, true);
  ChainFlags null_flags = add_chain_options(nullmodel, o.chain);
  nullmodel->add_option("--stat", o.statistic, "statistic (default c-score)");
  nullmodel->add_option("--tail", o.tail, "upper or lower (default upper)");
  nullmodel->add_option("--out,-o", o.chain.out_dir, "directory for the null-statistic CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*sample) return cmd_sample(o, sample_flags, out, err);
    if (*enumerate) return cmd_enumerate(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*nullmodel) return cmd_nullmodel(o, null_flags, out, err);
  } catch (const IncompatibleMatrix& e) {
    err << "error: " << e.what() << "; violating cells (row, col, zero-based): "
        << cells_json(e.cells()).dump() << '\n';
    return kExitInfeasible;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const SpaceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("wfm");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wfm
