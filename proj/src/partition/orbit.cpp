#include <stdexcept>
#include <unordered_set>

#include "conglab/errors.hpp"
#include "conglab/partition.hpp"

namespace conglab {

OrbitModel::OrbitModel(const Presentation& p, const Word& w, std::size_t power_bound)
    : pres_(p), w_(w), w_inv_(inverse(w, p)), bound_(power_bound) {
  if (w.is_identity()) throw std::invalid_argument("fixed word must not be the identity");
  if (tau_parity(w, p) == Parity::Odd) throw std::invalid_argument("odd parity: fixed word has an odd number of tau letters");
  if (power_bound == 0) throw std::invalid_argument("power bound must be positive");
  auto l = w.letters();
  rho_ = l.front();
  rho_prime_ = p.is_tau(letter_gen(rho_)) ? rho_ : static_cast<Letter>(rho_ ^ 1U);
  tau_square_ = l.size() == 2 && l[0] == l[1] && p.is_tau(letter_gen(rho_));
  if (!tau_square_ && l.back() == rho_prime_)
    throw std::invalid_argument("fixed word " + format_word(w, p) + " ends in the inverse of its first letter");
  const Syllable& lead = w.syllables().front();
  forbidden_ = p.is_tau(lead.gen) ? Word::generator(p, lead.gen, 4 - lead.exp)
                                  : from_letters(std::span<const Letter>(&rho_prime_, 1), p);
}

bool OrbitModel::is_canonical(const Word& g) const { return !ends_with(g, w_) && !ends_with(g, forbidden_); }

Word OrbitModel::canonical_form(const Word& g) const {
  const long j_max = tau_square_ ? 1 : static_cast<long>(bound_);
  Word best = g;
  long best_j = 0;
  Word up = g, down = g;
  for (long j = 1; j <= j_max; ++j) {
    up = multiply(up, w_, pres_);
    down = multiply(down, w_inv_, pres_);
    for (const auto& [cand, jj] : {std::pair<const Word&, long>{down, -j}, std::pair<const Word&, long>{up, j}}) {
      if (cand.length() < best.length() || (cand.length() == best.length() && shortlex_less(cand, best))) {
        best = cand;
        best_j = jj;
      }
    }
  }
  if (!tau_square_ && std::labs(best_j) == j_max)
    throw BudgetExceeded("canonical form needs |j| > " + std::to_string(bound_), bound_);
  if (is_canonical(best)) return best;
  Word next = multiply(best, w_, pres_);
  if (!is_canonical(next)) throw InvariantViolation("no canonical representative for " + format_word(g, pres_));
  return next;
}

OrbitPartition::OrbitPartition(const GroupPartition& part, std::optional<OrbitModel> model)
    : part_(part), model_(std::move(model)) {
  if (model_ && model_->fixed_word() != part.anchor())
    throw std::invalid_argument("the partition anchor must be the fixed word");
  if (model_ && model_->presentation() != part.presentation())
    throw std::invalid_argument("orbit model and partition use different groups");
}

Word OrbitPartition::representative(const Word& g) const { return model_ ? model_->canonical_form(g) : g; }

int OrbitPartition::assign(const Word& g) const { return part_.assign(representative(g)); }

OrbitPartition build_orbit_partition(const GroupPartition& part, std::optional<OrbitModel> model) {
  return OrbitPartition(part, std::move(model));
}

OrbitPartitionReport verify_orbit_partition(const OrbitPartition& op, std::size_t L) {
  const GroupPartition& part = op.group_partition();
  const CongruenceSystem& sys = part.system();
  const Presentation& p = part.presentation();
  OrbitPartitionReport rep;
  rep.depth = L;
  std::unordered_set<Word, WordHash> seen;
  for (const Word& g : enumerate_ball(p, L)) {
    Word y = op.representative(g);
    int piece = part.assign(y);
    seen.insert(y);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      ++rep.checks;
      Word fy = left_multiply(letter_code(i, true), y, p);
      Word z = op.representative(fy);
      if (z != fy) ++rep.exceptional;
      int other = part.assign(z);
      if (sys[i].left.test(piece) == sys[i].right.test(other)) continue;
      if (!rep.violation) rep.violation = PartitionViolation{g, left_multiply(letter_code(i, true), g, p), i, piece, other};
    }
  }
  rep.points = seen.size();
  rep.passed = !rep.violation;
  return rep;
}

}  // namespace conglab
