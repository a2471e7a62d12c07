#include "conglab/deduction.hpp"

namespace conglab {

std::size_t Deduction::congruence_steps() const {
  std::size_t n = 0;
  for (const auto& s : steps)
    if (s.rule == Rule::Congruence) ++n;
  return n;
}

PieceMask use_source(const CongruenceSystem& sys, const CongruenceUse& u) {
  const auto& c = sys[u.congruence];
  const PieceMask& m = u.inverse ? c.right : c.left;
  return u.complemented ? m.complement() : m;
}

PieceMask use_target(const CongruenceSystem& sys, const CongruenceUse& u) {
  const auto& c = sys[u.congruence];
  const PieceMask& m = u.inverse ? c.left : c.right;
  return u.complemented ? m.complement() : m;
}

DeductionStep congruence_step(const CongruenceSystem& sys, const CongruenceUse& u) {
  DeductionStep s;
  s.rule = Rule::Congruence;
  s.from = use_source(sys, u);
  s.to = use_target(sys, u);
  s.congruence = u.congruence;
  s.inverse = u.inverse;
  s.complemented = u.complemented;
  return s;
}

DeductionStep subset_step(const PieceMask& from, const PieceMask& to) {
  DeductionStep s;
  s.rule = Rule::Subset;
  s.from = from;
  s.to = to;
  return s;
}

bool replay(const CongruenceSystem& sys, const Deduction& d, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int r = sys.pieces();
  if (d.from.universe() != r || d.to.universe() != r) return fail("conclusion has wrong universe");
  PieceMask at = d.from;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const auto& s = d.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + ": ";
    if (s.from != at) return fail(where + "does not start where the previous step ended");
    if (s.rule == Rule::Subset) {
      if (d.relation == Relation::Congruent) return fail(where + "subset rule in a congruence chain");
      if (!s.from.subset_of(s.to)) return fail(where + s.from.to_string() + " is not a subset of " + s.to.to_string());
    } else {
      if (s.congruence >= sys.size()) return fail(where + "no such congruence");
      CongruenceUse u{s.congruence, s.complemented, s.inverse};
      if (use_source(sys, u) != s.from || use_target(sys, u) != s.to)
        return fail(where + "sides do not match congruence " + std::to_string(s.congruence + 1));
    }
    at = s.to;
  }
  if (at != d.to) return fail("chain ends at " + at.to_string() + ", not " + d.to.to_string());
  return true;
}

std::string describe(const Deduction& d) {
  std::string sep = d.relation == Relation::Congruent ? " ~ " : " <= ";
  std::string out = d.from.to_string() + sep + d.to.to_string() + ":";
  if (d.steps.empty()) return out + " trivially";
  for (const auto& s : d.steps) {
    out += "\n  " + s.from.to_string();
    if (s.rule == Rule::Subset) {
      out += " subset of " + s.to.to_string();
    } else {
      out += " ~ " + s.to.to_string() + "  by congruence " + std::to_string(s.congruence + 1);
      if (s.complemented) out += ", complemented";
      if (s.inverse) out += ", reversed";
    }
  }
  return out;
}

}  // namespace conglab
