#include "conglab/reduce.hpp"

#include "conglab/subcongruence.hpp"

namespace conglab {

namespace {

// Restriction of the alive pieces to 1..|alive|.
struct Renumbering {
  std::vector<int> original;  // new k-1 -> original k
  std::vector<int> fresh;     // original k-1 -> new k, 0 if deleted

  explicit Renumbering(const PieceMask& alive) : fresh(static_cast<std::size_t>(alive.universe()), 0) {
    for (int k : alive.indices()) {
      original.push_back(k);
      fresh[static_cast<std::size_t>(k - 1)] = static_cast<int>(original.size());
    }
  }
  int size() const { return static_cast<int>(original.size()); }

  PieceMask to_new(const PieceMask& m) const {
    PieceMask out(size());
    for (int k : m.indices())
      if (int f = fresh[static_cast<std::size_t>(k - 1)]) out.set(f);
    return out;
  }
  PieceMask to_original(const PieceMask& m, int r) const {
    PieceMask out(r);
    for (int k : m.indices()) out.set(original[static_cast<std::size_t>(k - 1)]);
    return out;
  }
};

}  // namespace

ReduceResult reduce_inconsistent(const CongruenceSystem& sys) {
  const int r = sys.pieces();
  PieceMask alive = PieceMask::full(r);
  ReduceResult out;
  out.deleted = PieceMask(r);

  while (!alive.empty()) {
    PieceMask del(r);
    Renumbering ren(alive);
    CongruenceSystem working(ren.size());
    for (const auto& c : sys.congruences()) {
      PieceMask l = c.left & alive, rr = c.right & alive;
      bool l_proper = !l.empty() && l != alive, r_proper = !rr.empty() && rr != alive;
      if (l_proper && r_proper) {
        working.add(ren.to_new(l), ren.to_new(rr));
        continue;
      }
      if (l.empty() != rr.empty()) del |= l | rr;
      if ((l == alive) != (rr == alive)) del |= alive - (l == alive ? rr : l);
    }
    if (working.size() > 0) del |= ren.to_original(SubcongruenceIndex(working).deletion_set(), r);
    if (del.empty()) break;
    out.rounds.push_back(del);
    out.deleted |= del;
    alive = alive - del;
  }

  Renumbering ren(alive);
  out.original_index = ren.original;
  out.system = CongruenceSystem(ren.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    PieceMask l = sys[i].left & alive, rr = sys[i].right & alive;
    if (l.empty() || rr.empty() || l == alive || rr == alive) continue;
    out.system.add(ren.to_new(l), ren.to_new(rr));
    out.kept_congruences.push_back(i);
  }
  return out;
}

}  // namespace conglab
