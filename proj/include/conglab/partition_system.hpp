#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conglab/system.hpp"

namespace conglab {

// Congruences between the sets A_s, s ranging over sequences s_3..s_N with
// 1 <= s_j <= j: {s : s_N = 1} ~ {s : s_j = i} for every (i, j) != (1, N).
struct PartitionSystem {
  int n = 0;
  CongruenceSystem system;
  std::vector<std::vector<int>> sequences;    // sequences[k-1] = (s_3, ..., s_N) of piece k
  std::vector<std::pair<int, int>> pairs;     // (i, j) of each congruence
};

// Sequences are numbered lexicographically with s_3 most significant;
// congruences are listed by j, then i.
PartitionSystem generate_partition_system(int n);

}  // namespace conglab
