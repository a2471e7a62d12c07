#include "conglab/budget.hpp"

#include <cstdlib>
#include <string>

namespace conglab {

std::size_t state_budget() {
  const char* env = std::getenv("CONGLAB_BUDGET_STATES");
  if (!env || !*env) return kDefaultStateBudget;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (...) {
  }
  return kDefaultStateBudget;
}

}  // namespace conglab
