#include <stdexcept>

#include "conglab/words.hpp"

namespace conglab {

Presentation::Presentation(std::size_t m_bar, std::size_t order_four) : m_(m_bar + order_four), m_bar_(m_bar) {
  if (m_ > 4096) throw std::invalid_argument("too many generators");
}

Parity tau_parity(const Word& g, const Presentation& p) {
  long total = 0;
  for (const auto& s : g.syllables())
    if (p.is_tau(s.gen)) total += s.exp;
  return total % 2 == 0 ? Parity::Even : Parity::Odd;
}

}  // namespace conglab
