#pragma once

#include <cstddef>

namespace conglab {

// Default state budget for exhaustive searches. Overridden by the
// CONGLAB_BUDGET_STATES environment variable.
inline constexpr std::size_t kDefaultStateBudget = 1u << 22;

std::size_t state_budget();

}  // namespace conglab
