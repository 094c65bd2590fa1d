#pragma once

#include <string_view>

namespace wfm {

/// Result of one proposal. no_move: no checkerboard / no tradeable columns.
enum class StepOutcome { no_move, rejected, accepted };

enum class Algorithm { swap, curveball };

std::string_view to_string(Algorithm algorithm);
/// Accepts "swap" or "curveball"; throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);

}  // namespace wfm
