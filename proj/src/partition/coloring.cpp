#include <stdexcept>

#include "conglab/partition.hpp"

namespace conglab {

Presentation witness_presentation(const CongruenceSystem& sys, std::size_t m_bar) {
  if (m_bar > sys.size()) throw std::invalid_argument("m_bar exceeds the number of congruences");
  return Presentation(m_bar, sys.size() - m_bar);
}

PieceMask letter_domain(const CongruenceSystem& sys, Letter l) {
  const Congruence& c = sys[letter_gen(l)];
  return letter_positive(l) ? c.left : c.right;
}

PieceMask letter_range(const CongruenceSystem& sys, Letter l) {
  const Congruence& c = sys[letter_gen(l)];
  return letter_positive(l) ? c.right : c.left;
}

TwoColoring::TwoColoring(const CongruenceSystem& sys, std::size_t m_bar) : closure_(sys.prefix(m_bar)) {
  const auto& nodes = closure_.touched();
  for (const PieceMask& m : nodes) {
    if (closure_.congruent(m, m.complement()))
      throw std::invalid_argument("not weak: " + m.to_string() + " is congruent to its complement");
    auto cls = static_cast<std::size_t>(closure_.class_of(m));
    if (cls >= least_.size()) least_.resize(cls + 1);
    if (least_[cls].universe() == 0 || m < least_[cls]) least_[cls] = m;
  }
}

PieceMask TwoColoring::representative(const PieceMask& m) const {
  int cls = closure_.class_of(m);
  return cls < 0 ? m : least_[static_cast<std::size_t>(cls)];
}

int TwoColoring::color(const PieceMask& m) const {
  return representative(m) < representative(m.complement()) ? 0 : 1;
}

}  // namespace conglab
