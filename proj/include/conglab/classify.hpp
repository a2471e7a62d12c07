#pragma once

#include <cstddef>
#include <optional>

#include "conglab/closure.hpp"
#include "conglab/deduction.hpp"
#include "conglab/subcongruence.hpp"
#include "conglab/system.hpp"

namespace conglab {

struct WeakWitness {
  PieceMask mask;  // M with M ~ M^c deducible
  Deduction chain;
};

struct ConsistencyWitness {
  PieceMask left;   // L
  PieceMask right;  // R strictly inside L, with L <= R deducible
  Deduction chain;
};

struct RedundancyWitness {
  std::size_t index;  // zero-based congruence number
  Deduction chain;    // derivation from the other congruences
};

struct ClassificationReport {
  int r = 0;
  std::size_t m = 0;
  std::optional<WeakWitness> weak_witness;
  std::optional<ConsistencyWitness> consistency_witness;
  std::optional<RedundancyWitness> redundancy_witness;
  MaskClasses classes;

  bool weak() const { return !weak_witness; }
  bool consistent() const { return !consistency_witness; }
  bool nonredundant() const { return !redundancy_witness; }
};

std::optional<WeakWitness> weakness_violation(const CongruenceSystem& sys);
std::optional<ConsistencyWitness> consistency_violation(const CongruenceSystem& sys);
// Scans from the last congruence down, so a repeated congruence is reported
// at its later occurrence.
std::optional<RedundancyWitness> redundancy_violation(const CongruenceSystem& sys);

inline bool is_weak(const CongruenceSystem& sys) { return !weakness_violation(sys); }
inline bool is_consistent(const CongruenceSystem& sys) { return !consistency_violation(sys); }
inline bool is_nonredundant(const CongruenceSystem& sys) { return !redundancy_violation(sys); }

ClassificationReport classify(const CongruenceSystem& sys, std::size_t budget);
ClassificationReport classify(const CongruenceSystem& sys);

// Witness verifiers used by tests and the CLI round trip.
bool check_witness(const CongruenceSystem& sys, const WeakWitness& w);
bool check_witness(const CongruenceSystem& sys, const ConsistencyWitness& w);
bool check_witness(const CongruenceSystem& sys, const RedundancyWitness& w);

}  // namespace conglab
