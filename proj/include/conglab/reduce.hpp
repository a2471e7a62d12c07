#pragma once

#include <cstddef>
#include <vector>

#include "conglab/system.hpp"

namespace conglab {

struct ReduceResult {
  CongruenceSystem system;                     // over the surviving pieces, renumbered 1..r'
  std::vector<int> original_index;             // original_index[k-1] = original number of new piece k
  std::vector<std::size_t> kept_congruences;   // zero-based original congruence numbers, in order
  PieceMask deleted;                           // over the original pieces
  std::vector<PieceMask> rounds;               // indices deleted in each round

  bool everything_deleted() const { return original_index.empty(); }
};

// Repeatedly deletes every piece that some deducible inconsistency forces to
// be empty. A congruence whose side collapses to nothing (or to everything)
// while the other side does not counts as such an inconsistency; congruences
// with both sides collapsed are dropped.
ReduceResult reduce_inconsistent(const CongruenceSystem& sys);

}  // namespace conglab
