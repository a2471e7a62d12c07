#include <stdexcept>

#include "conglab/budget.hpp"
#include "conglab/errors.hpp"
#include "conglab/partition.hpp"

namespace conglab {

MgState::MgState(const CongruenceSystem& sys, Variant flavor, std::size_t m_bar, int k_bar, MembershipOracle oracle)
    : sys_(sys),
      flavor_(flavor),
      m_bar_(flavor == Variant::Section2 ? sys.size() : m_bar),
      pres_(witness_presentation(sys, m_bar_)),
      k_bar_(k_bar),
      oracle_(std::move(oracle)) {
  if (k_bar < 1 || k_bar > sys.pieces()) throw std::invalid_argument("k_bar must be a piece index");
  if (flavor == Variant::Section2 && m_bar != CongruenceDigraph::npos && m_bar != sys.size())
    throw std::invalid_argument("Section2 witnesses are all free");
  for (std::size_t i = m_bar_; i < sys.size(); ++i)
    if (!sys[i].self_complement())
      throw std::invalid_argument("congruence " + std::to_string(i + 1) + " has an order-four witness but is not self-complement");
}

PieceMask MgState::membership(const Word& g) const {
  return oracle_ ? oracle_(g) : PieceMask(sys_.pieces());
}

const MgEntry& MgState::compute(const Word& g) {
  auto l = g.letters();
  return compute(std::span<const Letter>(l));
}

const MgEntry& MgState::compute(std::span<const Letter> letters) {
  Word g = from_letters(letters, pres_);
  if (auto it = table_.find(g); it != table_.end()) return it->second;
  MgEntry e;
  const int r = sys_.pieces();
  if (letters.empty()) {
    e.m = PieceMask::full(r);
    e.m.reset(k_bar_);
  } else {
    const MgEntry& inner = compute(letters.subspan(1));
    const PieceMask prev_plus = inner.plus;
    const bool prev_empty = inner.m.empty();
    e.m = PieceMask(r);
    if (!prev_empty) {
      PieceMask dom = letter_domain(sys_, letters[0]), ran = letter_range(sys_, letters[0]);
      bool direct = dom.subset_of(prev_plus), flipped = dom.complement().subset_of(prev_plus);
      if (direct && flipped)
        throw InvariantViolation("impossible branch reached: L and its complement both lie in M+ of " +
                                 format_word(from_letters(letters.subspan(1), pres_), pres_));
      if (direct) e.m = ran;
      else if (flipped) e.m = ran.complement();
    }
  }
  e.plus = e.m | membership(g);
  return table_.emplace(std::move(g), std::move(e)).first->second;
}

MgReport mg_edge_property_check(MgState& state, std::size_t L, std::size_t trace_bound) {
  const CongruenceSystem& sys = state.system();
  const Presentation& p = state.presentation();
  const int r = sys.pieces();
  MgReport rep;
  rep.depth = L;

  for (const Word& g : enumerate_ball(p, L)) {
    ++rep.words;
    const MgEntry& eg = state.compute(g);
    if (eg.plus.is_full() && !rep.full_plus) rep.full_plus = g;
    for (std::size_t i = 0; i < sys.size() && !rep.equivalence_violation; ++i) {
      Word h = left_multiply(letter_code(i, true), g, p);
      const PieceMask& a = eg.plus;
      const PieceMask& b = state.compute(h).plus;
      const Congruence& c = sys[i];
      if (c.left.subset_of(a) != c.right.subset_of(b)) {
        rep.equivalence_violation = std::make_pair(g, i);
      } else if (c.left.complement().subset_of(a) != c.right.complement().subset_of(b)) {
        rep.equivalence_violation = std::make_pair(g, i);
        rep.equivalence_complemented = true;
      }
    }
  }

  // Words with nonempty M, extended on the left; M_g is empty once the word
  // it extends has empty M, so the search prunes there.
  rep.trace_bound = trace_bound ? trace_bound
                                : (std::size_t{1} << (r + (state.flavor() == Variant::Section4 ? 1 : 0)));
  const auto letters = alphabet(p);
  const std::size_t budget = state_budget();
  std::vector<Letter> rev;  // rightmost letter first
  std::vector<Letter> fwd;
  auto word_of = [&]() {
    fwd.assign(rev.rbegin(), rev.rend());
    return std::span<const Letter>(fwd);
  };
  auto rec = [&](auto&& self, const PieceMask& m_prev, const PieceMask& plus_prev) -> void {
    for (Letter l : letters) {
      if (!letter_allowed(p, rev, l)) continue;
      rev.push_back(l);
      const MgEntry e = state.compute(word_of());
      if (!e.m.empty()) {
        if (++rep.traces > budget) throw BudgetExceeded("M-trace search", rep.traces);
        rep.longest_trace = std::max(rep.longest_trace, rev.size());
        if (plus_prev == m_prev && !rep.linkage_violation) {
          bool complemented = !letter_domain(sys, l).subset_of(m_prev);
          auto edge = rederive_edge(sys, state.flavor(), state.m_bar(), m_prev, letter_gen(l), !letter_positive(l),
                                    complemented);
          if (!edge || edge->to != e.m) rep.linkage_violation = from_letters(word_of(), p);
        }
        if (rev.size() >= rep.trace_bound) rep.trace_bound_reached = true;
        else self(self, e.m, e.plus);
      }
      rev.pop_back();
    }
  };
  const MgEntry root = state.compute(Word::identity());
  rec(rec, root.m, root.plus);

  rep.passed = !rep.equivalence_violation && !rep.full_plus && !rep.linkage_violation && !rep.trace_bound_reached;
  return rep;
}

}  // namespace conglab
