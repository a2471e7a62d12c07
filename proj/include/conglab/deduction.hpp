#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conglab/system.hpp"

namespace conglab {

enum class Rule { Subset, Congruence };

// One rule application. Chains compose by transitivity: each step starts
// where the previous one ended.
struct DeductionStep {
  Rule rule = Rule::Subset;
  PieceMask from;
  PieceMask to;
  std::size_t congruence = 0;
  bool inverse = false;       // congruence used right to left
  bool complemented = false;  // complemented form L^c ~ R^c

  bool operator==(const DeductionStep&) const = default;
};

enum class Relation { Congruent, Subcongruent };

struct Deduction {
  Relation relation = Relation::Congruent;
  PieceMask from;
  PieceMask to;
  std::vector<DeductionStep> steps;

  std::size_t congruence_steps() const;
};

// Directed use of a congruence. form = 2*complemented + inverse.
struct CongruenceUse {
  std::size_t congruence;
  bool complemented;
  bool inverse;

  static CongruenceUse from_id(std::size_t id) { return {id / 4, ((id >> 1) & 1U) != 0, (id & 1U) != 0}; }
  std::size_t id() const { return 4 * congruence + (complemented ? 2 : 0) + (inverse ? 1 : 0); }
};

PieceMask use_source(const CongruenceSystem& sys, const CongruenceUse& u);
PieceMask use_target(const CongruenceSystem& sys, const CongruenceUse& u);
DeductionStep congruence_step(const CongruenceSystem& sys, const CongruenceUse& u);
DeductionStep subset_step(const PieceMask& from, const PieceMask& to);

// Checks every step against its rule and the chain against its conclusion.
bool replay(const CongruenceSystem& sys, const Deduction& d, std::string* why = nullptr);

std::string describe(const Deduction& d);

}  // namespace conglab
