#include "conglab/classify.hpp"

#include "conglab/budget.hpp"

namespace conglab {

std::optional<WeakWitness> weakness_violation(const CongruenceSystem& sys) {
  CongruenceClosure closure(sys);
  std::optional<WeakWitness> best;
  for (const auto& m : closure.touched()) {
    auto d = closure.derive(m, m.complement());
    if (!d) continue;
    if (!best || d->steps.size() < best->chain.steps.size() ||
        (d->steps.size() == best->chain.steps.size() && m < best->mask))
      best = WeakWitness{m, *d};
  }
  return best;
}

std::optional<ConsistencyWitness> consistency_violation(const CongruenceSystem& sys) {
  SubcongruenceIndex index(sys);
  auto inc = index.first_inconsistency();
  if (!inc) return std::nullopt;
  return ConsistencyWitness{inc->left, inc->right, inc->chain};
}

std::optional<RedundancyWitness> redundancy_violation(const CongruenceSystem& sys) {
  for (std::size_t i = sys.size(); i-- > 0;) {
    const auto& c = sys[i];
    if (c.identity()) return RedundancyWitness{i, Deduction{Relation::Congruent, c.left, c.right, {}}};
    CongruenceClosure rest(sys, i);
    if (auto d = rest.derive(c.left, c.right)) return RedundancyWitness{i, *d};
  }
  return std::nullopt;
}

ClassificationReport classify(const CongruenceSystem& sys, std::size_t budget) {
  ClassificationReport rep;
  rep.r = sys.pieces();
  rep.m = sys.size();
  rep.weak_witness = weakness_violation(sys);
  rep.consistency_witness = consistency_violation(sys);
  rep.redundancy_witness = redundancy_violation(sys);
  rep.classes = CongruenceClosure(sys).classes(budget);
  return rep;
}

ClassificationReport classify(const CongruenceSystem& sys) { return classify(sys, state_budget()); }

bool check_witness(const CongruenceSystem& sys, const WeakWitness& w) {
  return w.chain.relation == Relation::Congruent && w.chain.from == w.mask && w.chain.to == w.mask.complement() &&
         replay(sys, w.chain);
}

bool check_witness(const CongruenceSystem& sys, const ConsistencyWitness& w) {
  return w.chain.relation == Relation::Subcongruent && w.right.proper_subset_of(w.left) && w.chain.from == w.left &&
         w.chain.to == w.right && replay(sys, w.chain);
}

bool check_witness(const CongruenceSystem& sys, const RedundancyWitness& w) {
  if (w.index >= sys.size()) return false;
  const auto& c = sys[w.index];
  if (w.chain.from != c.left || w.chain.to != c.right || w.chain.relation != Relation::Congruent) return false;
  if (c.identity()) return w.chain.steps.empty();
  for (const auto& s : w.chain.steps)
    if (s.congruence == w.index) return false;
  return replay(sys, w.chain);
}

}  // namespace conglab
