#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace wfm {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for chain `index` of an ensemble. Chain 0 keeps the base seed so a
/// one-chain ensemble reproduces a single run; chain i > 0 uses
/// splitmix64(base ^ splitmix64(i)).
constexpr std::uint64_t derive_chain_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return index == 0 ? base : splitmix64(base ^ splitmix64(index));
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Uniform unordered pair of distinct indices in [0, n), n >= 2.
inline std::pair<std::size_t, std::size_t> distinct_pair(Rng& rng, std::size_t n) {
  const std::size_t a = uniform_index(rng, n);
  std::size_t b = uniform_index(rng, n - 1);
  if (b >= a) ++b;
  return {a, b};
}

inline bool bernoulli(Rng& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace wfm
