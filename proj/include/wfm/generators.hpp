#pragma once

#include <string_view>

#include "wfm/binary_matrix.hpp"
#include "wfm/rng.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

/// Independent-element weight distributions used in mixing experiments.
enum class WeightPreset { all_ones, exponential, uniform01, uniform_half_one };

/// Names: "ones", "exp1", "unif01", "unif05-1".
WeightPreset parse_weight_preset(std::string_view name);

/// Draws every weight independently; Uniform(0,1) draws are strictly positive.
WeightMatrix make_weight_preset(WeightPreset preset, std::size_t rows, std::size_t cols,
                                Rng& rng);

/// Sets each weight to 0 independently with probability p.
void install_random_zeros(WeightMatrix& w, double p, Rng& rng);

/// Zeros a triangle anchored at the bottom-left corner, cells with
/// (rows - 1 - i) + j < t, choosing t so the triangle covers the fraction of
/// cells closest to `fraction`. The result is always monotonic. Returns t.
std::size_t install_triangle_zeros(WeightMatrix& w, double fraction);

/// Each cell is 1 independently with probability `density`; cells that are
/// structural zeros of `mask` (when given) are then forced to 0.
BinaryMatrix random_binary_matrix(std::size_t rows, std::size_t cols, double density,
                                  Rng& rng, const WeightMatrix* mask = nullptr);

/// Square weights (scale - |i - j|) / scale: 1 on the diagonal, decaying
/// linearly away from it. Requires scale > n - 1.
WeightMatrix diagonal_decay_weights(std::size_t n, double scale = 100.0);

}  // namespace wfm
