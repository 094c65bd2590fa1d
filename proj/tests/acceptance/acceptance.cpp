// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"
#include "wfm/chain.hpp"
#include "wfm/cli.hpp"
#include "wfm/diagnostics.hpp"
#include "wfm/generators.hpp"
#include "wfm/matrix_io.hpp"
#include "wfm/matrix_ops.hpp"
#include "wfm/oracle.hpp"
#include "wfm/statistics.hpp"

using namespace wfm;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and run parameters.
constexpr double kAc1StateTolerance = 0.03;
constexpr double kAc1KlLimit = 5e-3;
constexpr double kAc1SecondsLimit = 30.0;
constexpr double kAc2ResidualLimit = 1e-12;
constexpr double kAc2SecondsLimit = 60.0;
constexpr double kAc3TvLimit = 0.05;
constexpr std::size_t kAc3MaxStates = 500;
constexpr double kAc8SecondsLimit = 600.0;

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + why;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<std::size_t> unit(std::size_t n) { return std::vector<std::size_t>(n, 1); }

const char* name_of(Algorithm a) { return a == Algorithm::swap ? "swap" : "curveball"; }

Outcome ac1() {
  Outcome o;
  const WeightMatrix w = test::toy_weights();
  const auto space = enumerate_space(unit(3), unit(3), w);
  const auto states = test::toy_states();
  for (Algorithm alg : {Algorithm::swap, Algorithm::curveball}) {
    const auto t0 = Clock::now();
    ChainConfig c;
    c.algorithm = alg;
    c.burn_in = 10000;
    c.thin = 10000;
    c.retained = 1000;
    c.seed = kSeed;
    c.keep_matrices = true;
    const Trace t = run_chain(BinaryMatrix::identity(3), w, c);
    const auto rep = empirical_distribution(t.matrices, space);
    const double secs = seconds_since(t0);
    std::string freqs;
    double worst = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) {
      const std::size_t idx = *space.find(states[s]);
      worst = std::max(worst, std::abs(rep.frequencies[idx] - space.probabilities[idx]));
      freqs += fmt(s ? " %.3f" : "%.3f", rep.frequencies[idx]);
    }
    o.note(std::string(name_of(alg)) + " freqs A-F " + freqs + " KL " +
           fmt("%.2e", rep.kl_divergence) + " " + fmt("%.1fs", secs));
    o.require(worst <= kAc1StateTolerance,
              std::string(name_of(alg)) + " state deviation " + fmt("%.4f", worst));
    o.require(rep.kl_divergence < kAc1KlLimit, std::string(name_of(alg)) + " KL");
    o.require(secs < kAc1SecondsLimit, std::string(name_of(alg)) + " runtime");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<EnumeratedSpace> spaces;
  spaces.push_back(enumerate_space(unit(3), unit(3), test::toy_weights()));
  Rng rng(kSeed + 2);
  while (spaces.size() < 21) {
    const WeightMatrix w = test::random_positive_weights(4, 4, rng);
    auto s = enumerate_space(random_binary_matrix(4, 4, 0.5, rng), w);
    if (s.size() >= 2) spaces.push_back(std::move(s));
  }
  double worst_balance = 0.0, worst_stationary = 0.0;
  std::size_t states = 0;
  for (const auto& s : spaces) {
    states += s.size();
    for (Algorithm alg : {Algorithm::swap, Algorithm::curveball}) {
      const auto k = exact_kernel(s, alg);
      worst_balance = std::max(worst_balance, detailed_balance_residual(s, k));
      worst_stationary = std::max(worst_stationary, stationarity_residual(s, k));
    }
  }
  const double secs = seconds_since(t0);
  o.note("21 spaces, " + std::to_string(states) + " states; max balance residual " +
         fmt("%.2e", worst_balance) + ", max stationarity residual " +
         fmt("%.2e", worst_stationary) + ", " + fmt("%.1fs", secs));
  o.require(worst_balance < kAc2ResidualLimit, "detailed balance");
  o.require(worst_stationary < kAc2ResidualLimit, "stationarity");
  o.require(secs < kAc2SecondsLimit, "runtime");
  return o;
}

Outcome ac3() {
  Outcome o;
  std::vector<BinaryMatrix> starts{BinaryMatrix::identity(3)};
  Rng rng(kSeed + 3);
  while (starts.size() < 4) {
    const BinaryMatrix a = random_binary_matrix(4, 4, 0.5, rng);
    const auto n = enumerate_space(a, WeightMatrix::ones(4, 4)).size();
    if (n >= 2 && n <= kAc3MaxStates) starts.push_back(a);
  }
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const BinaryMatrix& a = starts[k];
    const WeightMatrix w = WeightMatrix::ones(a.rows(), a.cols());
    const auto space = enumerate_space(a, w);
    for (Algorithm alg : {Algorithm::swap, Algorithm::curveball}) {
      ChainConfig c;
      c.algorithm = alg;
      c.burn_in = 1000;
      c.thin = 100;
      c.retained = 5000;
      c.seed = kSeed + k;
      c.keep_matrices = true;
      const auto rep = empirical_distribution(run_chain(a, w, c).matrices, space);
      const std::string label = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " (" + std::to_string(space.size()) + " states) " +
                                name_of(alg);
      o.note(label + " TV " + fmt("%.4f", rep.total_variation));
      o.require(rep.total_variation < kAc3TvLimit, label);
    }
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto space = enumerate_space(test::diagonal_zero_a(), test::diagonal_zero_weights());
  const auto comps = connectivity(space, Algorithm::swap);
  auto component_of = [&](const BinaryMatrix& m) {
    const std::size_t idx = *space.find(m);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (std::find(comps[c].begin(), comps[c].end(), idx) != comps[c].end()) return c;
    }
    return comps.size();
  };
  o.note(std::to_string(comps.size()) + " components");
  o.require(comps.size() >= 2, "component count");
  o.require(component_of(test::diagonal_zero_a()) != component_of(test::diagonal_zero_b()), "A and B separated");

  const fs::path dir = test::scratch_dir("ac4");
  save_binary_matrix(dir / "a.txt", test::diagonal_zero_a());
  {
    std::ofstream w(dir / "w.txt");
    write_weight_matrix(w, test::diagonal_zero_weights());
  }
  std::ostringstream out, err;
  const int code = run_cli({"verify", "-m", (dir / "a.txt").string(), "-w",
                            (dir / "w.txt").string()},
                           out, err);
  o.note("verify exit code " + std::to_string(code));
  o.require(code != 0, "verify exit code");
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto a = test::detour_a(), b = test::detour_b();
  const auto space = enumerate_space(a, test::detour_weights());
  const std::size_t d_h = hamming_distance(a, b);
  const auto d = min_swaps(space, a, b);
  o.note("d_H " + std::to_string(d_h) + ", bound 2, BFS distance " +
         (d ? std::to_string(*d) : std::string("unreachable")));
  o.require(d.has_value(), "B reachable from A");
  o.require(d.has_value() && *d > 2, "distance exceeds bound");
  return o;
}

Outcome ac6() {
  Outcome o;
  Rng rng(kSeed + 6);
  std::size_t largest = 0, tightest_slack = SIZE_MAX, failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 4 + uniform_index(rng, 2), n = 4 + uniform_index(rng, 2);
    const WeightMatrix w = test::random_staircase_weights(m, n, rng, n - 1);
    if (!is_monotonic(w).is_monotonic) {
      ++failures;
      continue;
    }
    const auto space = enumerate_space(random_binary_matrix(m, n, 0.5, rng, &w), w);
    largest = std::max(largest, space.size());
    const auto k = exact_kernel(space, Algorithm::swap);
    if (connected_components(k).size() != 1) {
      ++failures;
      continue;
    }
    const std::size_t bound = max_pairwise_hamming(space) / 2;
    const std::size_t d = diameter(k);
    if (d > bound) {
      ++failures;
    } else {
      tightest_slack = std::min(tightest_slack, bound - d);
    }
  }
  o.note("100 spaces, largest " + std::to_string(largest) + " states, " +
         std::to_string(failures) + " failures, min slack " + std::to_string(tightest_slack));
  o.require(failures == 0, "connectivity or diameter bound");
  return o;
}

Outcome ac7() {
  Outcome o;
  double ess_swap = 0.0, ess_curveball = 0.0;
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(kSeed + 700 + s);
    const BinaryMatrix start = random_binary_matrix(20, 20, 0.25, rng);
    const WeightMatrix w = WeightMatrix::ones(20, 20);
    for (Algorithm alg : {Algorithm::swap, Algorithm::curveball}) {
      ChainConfig c;
      c.algorithm = alg;
      c.retained = 10000;
      c.seed = kSeed + s;
      c.statistics = {"diag-divergence"};
      const auto r = effective_sample_size(run_chain(start, w, c).values_of("diag-divergence"));
      (alg == Algorithm::swap ? ess_swap : ess_curveball) += r.ess / seeds;
    }
  }
  o.note("mean ESS swap " + fmt("%.1f", ess_swap) + ", curveball " + fmt("%.1f", ess_curveball));
  o.require(ess_curveball > ess_swap, "curveball ESS above swap ESS");
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(kSeed + 8);
  const BinaryMatrix start = random_binary_matrix(50, 50, 0.25, rng);
  const WeightMatrix base = diagonal_decay_weights(50);
  std::vector<double> means, lows, highs;
  for (double p : {-4.0, 0.0, 4.0}) {
    ChainConfig c;
    c.algorithm = Algorithm::swap;
    c.burn_in = 5000;
    c.thin = 1000;
    c.retained = 5000;
    c.seed = kSeed;
    c.statistics = {"diag-divergence"};
    const Trace t = run_chain(start, apply_power(base, p), c);
    const auto& v = t.values_of("diag-divergence");
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    means.push_back(diagnose(v).mean);
    lows.push_back(*lo);
    highs.push_back(*hi);
    o.note("p=" + fmt("%+.0f", p) + " mean " + fmt("%.4f", means.back()) + " range [" +
           fmt("%.4f", *lo) + ", " + fmt("%.4f", *hi) + "]");
  }
  const double secs = seconds_since(t0);
  o.note(fmt("%.1fs", secs));
  o.require(means[0] > means[1] && means[1] > means[2], "means decrease in p");
  o.require(lows[0] > highs[2], "p=-4 and p=+4 ranges disjoint");
  o.require(secs < kAc8SecondsLimit, "runtime");
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto anti = BinaryMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  const double t_id = diagonal_divergence(BinaryMatrix::identity(3));
  const double t_anti = diagonal_divergence(anti);
  const double c_id = c_score(BinaryMatrix::identity(2));
  const double c_same = c_score(BinaryMatrix::from_rows({{1, 0, 1, 1}, {1, 0, 1, 1}}));
  o.note("T(I)=" + fmt("%.17g", t_id) + " T(anti)=" + fmt("%.17g", t_anti) +
         " C(I2)=" + fmt("%.17g", c_id) + " C(same rows)=" + fmt("%.17g", c_same));
  o.require(t_id == 0.0, "T(identity)");
  o.require(t_anti == 4.0 / 9.0, "T(anti-diagonal)");
  o.require(c_id == 1.0, "C(2x2 identity)");
  o.require(c_same == 0.0, "C(identical rows)");
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome ac10() {
  Outcome o;
  const fs::path dir = test::scratch_dir("ac10");
  Rng rng(kSeed + 10);
  save_binary_matrix(dir / "a.txt", random_binary_matrix(10, 10, 0.3, rng));
  {
    std::ofstream w(dir / "w.txt");
    write_weight_matrix(w, make_weight_preset(WeightPreset::exponential, 10, 10, rng));
  }
  const std::string m = (dir / "a.txt").string(), w = (dir / "w.txt").string();
  auto run = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::make_pair(code, out.str());
  };
  std::size_t compared = 0;
  for (const char* alg : {"swap", "curveball"}) {
    for (const char* tag : {"r1", "r2"}) {
      const auto r = run({"sample", "-m", m, "-w", w, "-a", alg, "--burn-in", "500", "--thin",
                          "20", "--samples", "200", "--seed", "31", "--chains", "2",
                          "--keep-matrices", "--out", (dir / (std::string(alg) + tag)).string()});
      o.require(r.first == 0, std::string("sample ") + alg + " exit code");
    }
    for (const char* f : {"chain_0.csv", "chain_1.csv", "chain_1_matrices/000199.txt"}) {
      const auto a = slurp(dir / (std::string(alg) + "r1") / f);
      const auto b = slurp(dir / (std::string(alg) + "r2") / f);
      o.require(!a.empty() && a == b, std::string(alg) + " " + f + " identical");
      ++compared;
    }
  }
  for (const char* tag : {"n1", "n2"}) {
    const auto r = run({"nullmodel", "-m", m, "-w", w, "--burn-in", "200", "--thin", "10",
                        "--samples", "300", "--seed", "7", "--out", (dir / tag).string()});
    o.require(r.first == 0, "nullmodel exit code");
  }
  const auto n1 = slurp(dir / "n1" / "null_c-score.csv"), n2 = slurp(dir / "n2" / "null_c-score.csv");
  o.require(!n1.empty() && n1 == n2, "nullmodel trace identical");
  ++compared;
  o.note(std::to_string(compared) + " file pairs byte-identical");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4}, {"AC-5", ac5},
      {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8}, {"AC-9", ac9}, {"AC-10", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << " [" << fmt("%.1fs", seconds_since(t0))
              << "] " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
