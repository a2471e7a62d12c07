#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conglab/deduction.hpp"
#include "conglab/system.hpp"

namespace conglab {

struct MaskClasses {
  std::vector<std::vector<PieceMask>> classes;  // each sorted, ordered by first member
  bool complete = false;                        // false: only masks named by some congruence are listed
};

// Congruence closure of a system. Only masks that occur as a side, or the
// complement of a side, can be congruent to anything other than themselves,
// so the union-find runs over those alone.
class CongruenceClosure {
 public:
  explicit CongruenceClosure(const CongruenceSystem& sys, std::optional<std::size_t> skip = std::nullopt);

  const CongruenceSystem& system() const { return sys_; }

  bool congruent(const PieceMask& a, const PieceMask& b) const;
  // shortest chain of congruence steps, or nullopt
  std::optional<Deduction> derive(const PieceMask& a, const PieceMask& b) const;

  const std::vector<PieceMask>& touched() const { return nodes_; }
  int class_of(const PieceMask& m) const;  // -1 for untouched masks

  // All 2^r - 2 proper masks when that fits the budget, touched masks otherwise.
  MaskClasses classes(std::size_t budget) const;

 private:
  int node(const PieceMask& m) const;
  int find(int x) const;

  CongruenceSystem sys_;
  std::optional<std::size_t> skip_;
  std::vector<PieceMask> nodes_;
  std::unordered_map<PieceMask, int, PieceMaskHash> index_;
  mutable std::vector<int> parent_;
  std::vector<std::vector<std::pair<std::size_t, int>>> out_;  // (use id, target node)
};

bool equivalent_systems(const CongruenceSystem& a, const CongruenceSystem& b);

}  // namespace conglab
