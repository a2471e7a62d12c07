#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conglab/deduction.hpp"
#include "conglab/system.hpp"

namespace conglab {

// Decides L <= R ("congruent to a subset of"). A deduction is a subset step
// into the source of some directed congruence use, a run of uses whose target
// is a subset of the next source, and a final subset step, so reachability is
// decided on the 4m uses instead of the 2^r masks.
class SubcongruenceIndex {
 public:
  explicit SubcongruenceIndex(const CongruenceSystem& sys);

  const CongruenceSystem& system() const { return sys_; }

  bool holds(const PieceMask& l, const PieceMask& r) const;
  // fewest congruence steps; ties broken by use order
  std::optional<Deduction> derive(const PieceMask& l, const PieceMask& r) const;

  struct Inconsistency {
    PieceMask left;   // L
    PieceMask right;  // R, a proper subset of L with L <= R
    Deduction chain;
  };

  // One inconsistency per reachable pair of uses whose end is strictly below
  // its start. Every deducible L <= R with R strictly inside L sits between
  // one of these pairs.
  std::vector<Inconsistency> maximal_inconsistencies() const;
  std::optional<Inconsistency> first_inconsistency() const;
  PieceMask deletion_set() const;

  // All deducible (L, R) with |L| > |R|, sorted.
  std::vector<std::pair<PieceMask, PieceMask>> order_decreasing_pairs(std::size_t budget) const;

 private:
  Deduction chain_between(std::size_t from_use, std::size_t to_use) const;
  std::vector<std::size_t> path(std::size_t from_use, std::size_t to_use) const;

  CongruenceSystem sys_;
  std::vector<PieceMask> src_, dst_;
  std::vector<std::vector<std::size_t>> next_;
  std::vector<std::vector<int>> dist_;  // dist_[u][v] in uses, -1 if unreachable
};

}  // namespace conglab
