#pragma once

#include <cstddef>
#include <vector>

#include "conglab/system.hpp"

namespace conglab {

struct TransformResult {
  CongruenceSystem system;
  std::size_t m_bar = 0;                              // leading weak congruences
  std::vector<std::size_t> self_complement_indices;   // zero-based, all >= m_bar
  std::size_t input_size = 0;                          // m before minimization
};

// Smallest number of congruences of any system with the same closure as sys.
// Closure classes come in complementary pairs: a pair of distinct classes C,
// C^c needs |C|-1 congruences, a class closed under complement needs |C|/2.
std::size_t minimum_congruence_count(const CongruenceSystem& sys);

// Deletes identity and deducible congruences, last first, until none remain.
CongruenceSystem minimize_system(const CongruenceSystem& sys);

TransformResult transform_to_weak_plus_selfcomp(const CongruenceSystem& sys);

bool check_transform(const CongruenceSystem& input, const TransformResult& result);

}  // namespace conglab
