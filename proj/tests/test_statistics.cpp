#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wfm/diagnostics.hpp"
#include "wfm/generators.hpp"
#include "wfm/statistics.hpp"

using namespace wfm;

namespace {

BinaryMatrix transposed(const BinaryMatrix& a) {
  BinaryMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
  }
  return t;
}

std::vector<double> iid_normal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("diagonal divergence values") {
  CHECK(diagonal_divergence(BinaryMatrix::identity(3)) == 0.0);
  const auto anti = BinaryMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(diagonal_divergence(anti) == doctest::Approx(4.0 / 9.0));
  CHECK(diagonal_divergence(BinaryMatrix::from_rows({{1, 1}, {1, 1}})) == doctest::Approx(0.25));
  CHECK_THROWS_AS(diagonal_divergence(BinaryMatrix(2, 3)), Error);
  CHECK_THROWS_AS(diagonal_divergence(BinaryMatrix(3, 3)), Error);

  Rng rng(40);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + uniform_index(rng, 8);
    BinaryMatrix a = random_binary_matrix(n, n, 0.4, rng);
    if (a.total_ones() == 0) a.set(0, n - 1, true);
    const double v = diagonal_divergence(a);
    CHECK(v == doctest::Approx(diagonal_divergence(transposed(a))));
    CHECK(v >= 0.0);
    CHECK(v <= static_cast<double>(n - 1) / n + 1e-15);
  }
}

TEST_CASE("C-score values") {
  CHECK(c_score(BinaryMatrix::from_rows({{1, 0, 1}, {1, 0, 1}})) == 0.0);
  CHECK(c_score(BinaryMatrix::identity(2)) == doctest::Approx(1.0));
  CHECK(c_score(BinaryMatrix::identity(3)) == doctest::Approx(1.0));
  // rows {1,1,0},{0,1,1}: one shared column, (2-1)(2-1) = 1
  CHECK(c_score(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(c_score(BinaryMatrix(1, 4)), Error);

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 2 + uniform_index(rng, 6), n = 1 + uniform_index(rng, 8);
    const BinaryMatrix a = random_binary_matrix(m, n, 0.5, rng);
    const auto perm = test::random_permutation(n, rng);
    BinaryMatrix p(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, a.at(i, perm[j]));
    }
    CHECK(c_score(a) >= 0.0);
    CHECK(c_score(a) == doctest::Approx(c_score(p)));
  }
}

TEST_CASE("statistic registry") {
  CHECK(find_statistic("c-score").evaluate(BinaryMatrix::identity(2)) == doctest::Approx(1.0));
  CHECK(find_statistic("diag-divergence").requires_square);
  CHECK_THROWS_AS(find_statistic("nestedness"), ConfigError);
  CHECK_THROWS_AS(check_statistic_applicable(find_statistic("diag-divergence"), 3, 4),
                  ConfigError);
  CHECK_NOTHROW(check_statistic_applicable(find_statistic("c-score"), 3, 4));
}

TEST_CASE("ESS of iid draws is close to n") {
  const auto v = iid_normal(10000, 42);
  const auto r = effective_sample_size(v);
  CHECK(r.n == 10000);
  CHECK_FALSE(r.zero_variance);
  CHECK(r.ess == doctest::Approx(10000).epsilon(0.15));
  CHECK(r.ess <= 10000);
}

TEST_CASE("ESS of an AR(1) chain matches its integrated autocorrelation time") {
  // rho = 0.9 gives n (1 - rho) / (1 + rho) = n / 19
  Rng rng(43);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(200000);
  double x = 0.0;
  for (auto& y : v) y = x = 0.9 * x + d(rng);
  CHECK(effective_sample_size(v).ess == doctest::Approx(200000.0 / 19).epsilon(0.15));
}

TEST_CASE("ESS edge cases") {
  std::vector<double> alternating(1000);
  for (std::size_t i = 0; i < alternating.size(); ++i) alternating[i] = i % 2 ? 1.0 : -1.0;
  const auto alt = effective_sample_size(alternating);
  CHECK(alt.ess <= 1000);

  const std::vector<double> constant(500, 3.25);
  const auto c = effective_sample_size(constant);
  CHECK(c.zero_variance);
  CHECK(c.ess == 0.0);

  CHECK_THROWS_AS(effective_sample_size(std::vector<double>(9, 1.0)), Error);
}

TEST_CASE("Tukey-Hanning MCSE") {
  const auto v = iid_normal(10000, 44);
  CHECK(mcse_tukey_hanning(v) == doctest::Approx(0.01).epsilon(0.2));
  CHECK(mcse_tukey_hanning(std::vector<double>(200, 1.5)) == 0.0);
  CHECK_THROWS_AS(mcse_tukey_hanning(std::vector<double>(99, 1.0)), Error);

  // mcse^2 * ESS estimates the marginal variance
  Rng rng(45);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> ar(50000);
  double x = 0.0;
  for (auto& y : ar) y = x = 0.5 * x + d(rng);
  const auto rep = diagnose(ar);
  REQUIRE(rep.ess.has_value());
  REQUIRE(rep.mcse.has_value());
  const double var = rep.sd * rep.sd;
  CHECK(*rep.mcse * *rep.mcse * rep.ess->ess == doctest::Approx(var).epsilon(0.3));
}

TEST_CASE("diagnose omits estimates on short traces") {
  const auto rep = diagnose(std::vector<double>{1, 2, 3});
  CHECK(rep.n == 3);
  CHECK(rep.mean == doctest::Approx(2.0));
  CHECK_FALSE(rep.ess.has_value());
  CHECK_FALSE(rep.mcse.has_value());
}

TEST_CASE("empirical p-values") {
  std::vector<double> null(4999);
  for (std::size_t i = 0; i < null.size(); ++i) null[i] = static_cast<double>(i) / 4999.0;
  CHECK(empirical_p_value(5.0, null) == doctest::Approx(1.0 / 5000));
  CHECK(empirical_p_value(-5.0, null) == 1.0);
  CHECK(empirical_p_value(0.5, null) == doctest::Approx(0.5).epsilon(0.01));
  CHECK(empirical_p_value(-5.0, null, Tail::lower) == doctest::Approx(1.0 / 5000));
  CHECK(empirical_p_value(0.0, std::vector<double>(10, 0.0)) == 1.0);
  CHECK_THROWS_AS(empirical_p_value(0.0, std::vector<double>{}), Error);
}
