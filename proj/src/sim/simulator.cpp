#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "conglab/budget.hpp"
#include "conglab/errors.hpp"
#include "conglab/sim.hpp"

namespace conglab {

// ---------------------------------------------------------------------------
// OrbitGraph

std::pair<OrbitGraph::Id, bool> OrbitGraph::intern(const ExactPoint& p) {
  if (auto it = index_.find(p); it != index_.end()) return {it->second, false};
  auto id = static_cast<Id>(points_.size());
  points_.push_back(p);
  approx_.push_back(approximate(p));
  next_.resize(next_.size() + 2 * gens_, kNone);
  index_.emplace(p, id);
  return {id, true};
}

std::optional<OrbitGraph::Id> OrbitGraph::find(const ExactPoint& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

OrbitGraph::Id OrbitGraph::neighbor(Id id, std::size_t gen, bool positive, const GroupRealization& real) {
  const std::size_t slot = id * 2 * gens_ + 2 * gen + (positive ? 1 : 0);
  if (next_[slot] != kNone) return next_[slot];
  ExactPoint image = real.letter(letter_code(gen, positive)) * points_[id];
  Id other = intern(image).first;
  next_[slot] = other;
  next_[other * 2 * gens_ + 2 * gen + (positive ? 0 : 1)] = id;
  return other;
}

OrbitGraph::Id OrbitGraph::walk(Id id, const Word& g, const GroupRealization& real) {
  auto letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) id = neighbor(id, letter_gen(*it), letter_positive(*it), real);
  return id;
}

void OrbitGraph::truncate(std::size_t n) {
  if (n >= points_.size()) return;
  for (std::size_t i = n; i < points_.size(); ++i) index_.erase(points_[i]);
  points_.resize(n);
  approx_.resize(n);
  next_.resize(n * 2 * gens_);
  for (auto& s : next_)
    if (s != kNone && s >= n) s = kNone;
}

// ---------------------------------------------------------------------------
// State

std::size_t StageState::patch_count() const {
  std::size_t n = 0;
  for (const auto& b : pieces) n += b.size();
  return n;
}

GroupRealization simulation_realization(const CongruenceSystem& sys, std::size_t m_bar, std::size_t depth) {
  GroupRealization real = standard_generators(witness_presentation(sys, m_bar));
  certify(real, depth);
  return real;
}

StageState init(const CongruenceSystem& sys, GroupRealization realization, Variant variant, std::size_t m_bar,
                SimConfig config) {
  if (sys.pieces() < 2 || sys.pieces() > static_cast<int>(CongruenceDigraph::kMaxPieces))
    throw std::invalid_argument("the simulator handles 2 to " + std::to_string(CongruenceDigraph::kMaxPieces) + " pieces");
  if (sys.empty()) throw std::invalid_argument("empty system");
  if (variant == Variant::Section2) {
    if (m_bar != CongruenceDigraph::npos && m_bar != sys.size())
      throw std::invalid_argument("Section2 witnesses are all free");
    m_bar = sys.size();
  } else if (m_bar == CongruenceDigraph::npos) {
    throw std::invalid_argument("Section4 needs the number of free witnesses");
  }
  if (m_bar > sys.size()) throw std::invalid_argument("m_bar exceeds the number of congruences");
  for (std::size_t i = m_bar; i < sys.size(); ++i)
    if (!sys[i].self_complement())
      throw std::invalid_argument("congruence " + std::to_string(i + 1) + " has an order-four witness but is not self-complement");
  if (realization.presentation != witness_presentation(sys, m_bar))
    throw std::invalid_argument("the realization is for a different group");
  if (realization.certified_depth < config.min_certified_depth)
    throw std::invalid_argument("insufficient freeness certificate: certified to depth " +
                                std::to_string(realization.certified_depth) + ", need " +
                                std::to_string(config.min_certified_depth));

  StageState st;
  st.system = sys;
  st.variant = variant;
  st.m_bar = m_bar;
  st.realization = std::move(realization);
  st.config = config;
  const int shift = sys.pieces() + (variant == Variant::Section4 ? 1 : 0);
  st.link_radius = config.link_radius ? config.link_radius : (std::size_t{1} << shift);
  st.schedule = BaseSchedule(sys.pieces());
  st.pieces.resize(static_cast<std::size_t>(sys.pieces()));
  st.graph.reset(sys.size());
  return st;
}

namespace {

struct Rejected {
  std::string reason;
};

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fingerprint(const StageState& st) {
  std::uint64_t h = 14695981039346656037ULL;
  h = fnv(h, st.stage);
  WordHash wh;
  for (std::size_t k = 0; k < st.pieces.size(); ++k) {
    for (const auto& p : st.pieces[k]) {
      h = fnv(h, k);
      h = fnv(h, wh(p.word));
      h = fnv(h, p.stage);
      h = fnv(h, std::hash<std::string>()(p.radius_sq.get_str()));
      h = fnv(h, p.base_center.hash());
    }
  }
  for (const auto& t : st.tracked) {
    h = fnv(h, t.id);
    h = fnv(h, t.members.hash());
  }
  return h | 1U;
}

void ensure_verified(StageState& st) {
  const std::uint64_t fp = fingerprint(st);
  if (st.verified == fp) return;
  InvariantReport rep = check_invariants(st);
  if (!rep.passed()) throw InvariantViolation("step refused: " + describe(rep));
  st.verified = fp;
}

Rational quarter_power(std::size_t level) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(2 * level);
  return Rational(mpz_class(1), den);
}

// One attempt at a stage from a given x0.
class StageBuilder {
 public:
  StageBuilder(StageState& st, const ExactPoint& x0, bool forced, int t)
      : st_(st),
        p_(st.presentation()),
        sys_(st.system),
        r_(st.r()),
        x0_(x0),
        forced_(forced),
        t_(t),
        base_(st.graph.size()) {}

  StageRecord build() {
    auto [id, fresh] = st_.graph.intern(x0_);
    if (!fresh) throw Rejected{"x0 is a known orbit point"};
    x0_id_ = id;
    owner_.emplace(id, Word::identity());
    const Approx& a = st_.graph.approx(id);
    if (st_.caps.on_boundary(x0_, a)) throw Rejected{"x0 on a patch boundary"};
    if (forced_ && st_.caps.closure_hits(x0_, a, t_)) throw Rejected{"x0 in the closure of B_t"};
    const PieceMask m0 = member(id);
    if (forced_) {
      k_bar_ = t_;
    } else {
      k_bar_ = m0.complement().lowest();
      if (k_bar_ == 0) throw InvariantViolation("x0 " + x0_.to_string() + " lies in every piece");
    }
    check_axes();

    const std::size_t mg_bar = st_.variant == Variant::Section2 ? CongruenceDigraph::npos : st_.m_bar;
    MgState mg(sys_, st_.variant, mg_bar, k_bar_, [this](const Word& g) { return oracle(g); });
    mg_ = &mg;
    collect_support();
    collect_s();
    collect_s_prime();
    const Rational s = choose_radius();
    return commit(s);
  }

 private:
  PieceMask member(OrbitGraph::Id id) {
    if (auto it = members_.find(id); it != members_.end()) return it->second;
    PieceMask m = st_.caps.membership(st_.graph.point(id), st_.graph.approx(id), r_);
    members_.emplace(id, m);
    return m;
  }

  // pieces holding g(x0) before this stage; no point is needed while there
  // are no patches
  PieceMask oracle(const Word& g) { return st_.caps.size() == 0 ? PieceMask(r_) : member(id_of(g)); }

  OrbitGraph::Id id_of(const Word& g) {
    if (g.is_identity()) return x0_id_;
    if (auto it = ids_.find(g); it != ids_.end()) return it->second;
    auto letters = g.letters();
    Word tail = from_letters(std::span<const Letter>(letters).subspan(1), p_);
    OrbitGraph::Id t = id_of(tail);
    OrbitGraph::Id id = st_.graph.neighbor(t, letter_gen(letters[0]), letter_positive(letters[0]), st_.realization);
    if (id < base_) throw Rejected{"orbit of x0 meets an earlier orbit"};
    if (auto [it, fresh] = owner_.emplace(id, g); !fresh) {
      Word w = multiply(inverse(it->second, p_), g, p_);
      if (evaluate(st_.realization, w).is_identity())
        throw InvariantViolation("the realization is not free: " + format_word(w, p_) + " (length " +
                                 std::to_string(w.length()) + ") evaluates to the identity");
      throw Rejected{"x0 is fixed by " + format_word(w, p_)};
    }
    ids_.emplace(g, id);
    return id;
  }

  std::vector<Word> neighbors(const Word& g) const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < p_.generators(); ++i) {
      const bool tau = p_.is_tau(i);
      out.push_back(multiply(Word::generator(p_, i, tau ? 3 : -1), g, p_));
      out.push_back(multiply(Word::generator(p_, i, 1), g, p_));
    }
    return out;
  }

  void check_axes() {
    const auto letters = alphabet(p_);
    std::vector<Letter> rev;
    auto rec = [&](auto&& self, const ExactPoint& y) -> void {
      if (!rev.empty() && y == x0_) throw Rejected{"x0 is fixed by a short word"};
      if (rev.size() == st_.config.axis_depth) return;
      for (Letter l : letters) {
        if (!letter_allowed(p_, rev, l)) continue;
        rev.push_back(l);
        self(self, st_.realization.letter(l) * y);
        rev.pop_back();
      }
    };
    rec(rec, x0_);
  }

  // Words with M nonempty, by left extension. A run of more than link_radius
  // consecutive points outside every piece along one chain contradicts the
  // bounded-path property of the digraph.
  void collect_support() {
    const std::size_t budget = state_budget();
    const auto letters = alphabet(p_);
    std::deque<std::pair<Word, std::size_t>> queue;
    std::size_t run0 = member(x0_id_).empty() ? 1 : 0;
    queue.emplace_back(Word::identity(), run0);
    support_.push_back(Word::identity());
    while (!queue.empty()) {
      auto [g, run] = queue.front();
      queue.pop_front();
      for (Letter l : letters) {
        Word h = left_multiply(l, g, p_);
        if (h.length() != g.length() + 1) continue;
        if (mg_->compute(h).m.empty()) continue;
        std::size_t hrun = oracle(h).empty() ? run + 1 : 0;
        if (hrun > st_.link_radius)
          throw InvariantViolation("M support: " + std::to_string(hrun) + " consecutive points outside every piece on the chain of " +
                                   format_word(h, p_) + ", more than the link radius " + std::to_string(st_.link_radius));
        longest_ = std::max(longest_, h.length());
        support_.push_back(h);
        if (support_.size() > budget) throw BudgetExceeded("M support", support_.size());
        queue.emplace_back(std::move(h), hrun);
      }
    }
  }

  bool occupied(const Word& g) { return !mg_->compute(g).plus.empty(); }

  bool near(const Word& g) {
    if (st_.config.activity_radius == 0) return occupied(g);
    if (auto it = near_.find(g); it != near_.end()) return it->second;
    bool hit = false;
    std::unordered_set<Word, WordHash> seen{g};
    std::vector<Word> frontier{g};
    for (std::size_t d = 0; d <= st_.config.activity_radius && !hit; ++d) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        if (occupied(w)) {
          hit = true;
          break;
        }
        if (d == st_.config.activity_radius) continue;
        for (Word& h : neighbors(w))
          if (seen.insert(h).second) next.push_back(std::move(h));
      }
      frontier = std::move(next);
    }
    near_.emplace(g, hit);
    return hit;
  }

  // Points joined to x0 by active links.
  void collect_s() {
    const std::size_t budget = state_budget();
    std::unordered_set<Word, WordHash> seen{Word::identity()};
    s_.push_back(Word::identity());
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const Word g = s_[i];
      const bool ng = near(g);
      for (Word& h : neighbors(g)) {
        if (seen.count(h) || !(ng || near(h))) continue;
        seen.insert(h);
        s_.push_back(std::move(h));
        if (s_.size() > budget) throw BudgetExceeded("active component of x0", s_.size());
      }
    }
    in_s_ = std::move(seen);
  }

  void collect_s_prime() {
    const std::size_t budget = state_budget();
    std::unordered_set<Word, WordHash> seen = in_s_;
    s_prime_ = s_;
    std::vector<Word> frontier = s_;
    for (std::size_t d = 0; d <= st_.config.activity_radius; ++d) {
      std::vector<Word> next;
      for (const Word& g : frontier)
        for (Word& h : neighbors(g))
          if (seen.insert(h).second) {
            next.push_back(h);
            s_prime_.push_back(std::move(h));
          }
      if (s_prime_.size() > budget) throw BudgetExceeded("link neighbourhood of the active component", s_prime_.size());
      frontier = std::move(next);
    }
    for (const Word& g : s_prime_) {
      OrbitGraph::Id id = id_of(g);
      s_prime_ids_.push_back(id);
      if (st_.caps.on_boundary(st_.graph.point(id), st_.graph.approx(id))) throw Rejected{"orbit point on a patch boundary"};
    }
  }

  // Smallest squared chord between a new point and any other new point or
  // existing cap center; doubles only narrow down the candidate pairs.
  Rational min_chord2() {
    struct Item {
      Approx a;
      const ExactPoint* p;
      bool fresh;
    };
    std::vector<Item> items;
    for (auto id : s_prime_ids_) items.push_back({st_.graph.approx(id), &st_.graph.point(id), true});
    for (std::size_t c = 0; c < st_.caps.size(); ++c)
      items.push_back({st_.caps.center_approx(c), &st_.caps.cap(c).center, false});
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.a[0] < y.a[0]; });
    auto d2 = [](const Approx& x, const Approx& y) {
      double s = 0;
      for (int i = 0; i < 3; ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
      return s;
    };
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size() && items[j].a[0] - items[i].a[0] <= std::sqrt(best); ++j)
        if (items[i].fresh || items[j].fresh) best = std::min(best, d2(items[i].a, items[j].a));
    constexpr double kSlack = 1e-12;
    const double bound = best + kSlack, gap = std::sqrt(bound) + kSlack;
    std::optional<Rational> exact;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size() && items[j].a[0] - items[i].a[0] <= gap; ++j) {
        if (!(items[i].fresh || items[j].fresh) || d2(items[i].a, items[j].a) > bound) continue;
        Rational c = chord2(*items[i].p, *items[j].p);
        if (!exact || c < *exact) exact = c;
      }
    if (!exact) return 4;  // a single point and no caps
    return *exact;
  }

  Rational choose_radius() {
    const Rational limit = min_chord2() / 4;
    if (sgn(limit) == 0) throw InvariantViolation("coincident orbit points survived the distinctness checks");
    std::size_t level = 1;
    while (quarter_power(level) > limit) ++level;
    Rational s = quarter_power(level);
    for (auto id : s_prime_ids_) {
      const ExactPoint& p = st_.graph.point(id);
      for (std::size_t c : st_.caps.near(st_.graph.approx(id), std::sqrt(s.get_d()))) {
        const Cap& old = st_.caps.cap(c);
        const bool inside = cap_contains(old, p);
        for (;;) {
          CapRelation rel = relate(Cap{p, s}, old);
          bool ok = inside ? (rel == CapRelation::FirstInsideSecond || rel == CapRelation::Equal) : rel == CapRelation::Disjoint;
          if (ok) break;
          if (++level > 4096) throw InvariantViolation("no cap radius separates " + p.to_string() + " from an existing patch");
          s = quarter_power(level);
        }
      }
    }
    return s;
  }

  StageRecord commit(const Rational& s) {
    StageRecord rec;
    rec.stage = st_.stage;
    rec.forced = forced_;
    rec.x0 = x0_;
    rec.x0_id = x0_id_;
    rec.k_bar = k_bar_;
    rec.support = support_.size();
    rec.longest_trace = longest_;
    rec.s_size = s_.size();
    rec.s_prime_size = s_prime_.size();
    rec.radius_sq = s;
    for (const Word& g : support_) {
      const PieceMask m = mg_->compute(g).m;
      const OrbitGraph::Id id = id_of(g);
      st_.caps.insert(Cap{st_.graph.point(id), s}, m);
      for (int k : m.indices()) {
        st_.pieces[static_cast<std::size_t>(k - 1)].push_back(Patch{g, st_.stage, x0_, s});
        ++rec.patches_added;
      }
    }
    for (const Word& g : s_) st_.tracked.push_back(TrackedPoint{st_.stage, g, id_of(g), PieceMask(r_)});
    for (auto& t : st_.tracked) t.members = st_.caps.membership(st_.graph.point(t.id), st_.graph.approx(t.id), r_);
    return rec;
  }

  StageState& st_;
  const Presentation& p_;
  const CongruenceSystem& sys_;
  int r_;
  ExactPoint x0_;
  bool forced_;
  int t_;
  std::size_t base_;
  OrbitGraph::Id x0_id_ = OrbitGraph::kNone;
  int k_bar_ = 0;
  MgState* mg_ = nullptr;
  std::unordered_map<Word, OrbitGraph::Id, WordHash> ids_;
  std::unordered_map<OrbitGraph::Id, Word> owner_;
  std::unordered_map<OrbitGraph::Id, PieceMask> members_;
  std::unordered_map<Word, bool, WordHash> near_;
  std::vector<Word> support_;
  std::size_t longest_ = 0;
  std::vector<Word> s_;
  std::unordered_set<Word, WordHash> in_s_;
  std::vector<Word> s_prime_;
  std::vector<OrbitGraph::Id> s_prime_ids_;
};

}  // namespace

void step(StageState& st) {
  ensure_verified(st);
  const BaseCap z = st.schedule.entry(st.stage);
  const bool forced = z.whole && st.stage < static_cast<std::size_t>(st.r());
  const int t = forced ? static_cast<int>(st.stage) + 1 : 0;
  std::string last_reason = "no candidate inside the base cap";
  for (std::size_t attempt = 0; attempt < st.config.x0_attempts; ++attempt) {
    ExactPoint x0 = z.whole ? whole_sphere_candidate(attempt) : cap_candidate(z, attempt);
    if (!z.whole && !cap_contains(z.cap, x0)) continue;
    const std::size_t base = st.graph.size();
    const std::size_t tracked = st.tracked.size();
    try {
      StageRecord rec = StageBuilder(st, x0, forced, t).build();
      rec.z = z;
      rec.attempts = attempt + 1;
      st.history.push_back(std::move(rec));
      ++st.stage;
      return;
    } catch (const Rejected& r) {
      last_reason = r.reason;
      st.graph.truncate(base);
    } catch (...) {
      st.graph.truncate(base);
      st.tracked.resize(tracked);
      throw;
    }
  }
  throw BudgetExceeded("no valid x0 found in budget: " + std::to_string(st.config.x0_attempts) + " candidates for base entry " +
              std::to_string(z.index) + ", last rejection: " + last_reason,
                       st.config.x0_attempts);
}

RunSummary run(StageState& st, std::size_t steps, const StepObserver& after_step) {
  RunSummary sum;
  sum.requested = steps;
  for (std::size_t i = 0; i < steps; ++i) {
    try {
      step(st);
    } catch (const BudgetExceeded& e) {
      sum.passed = false;
      sum.budget_error = true;
      sum.error = e.what();
      break;
    } catch (const std::exception& e) {
      sum.passed = false;
      sum.error = e.what();
      break;
    }
    InvariantReport rep = check_invariants(st);
    sum.reports.push_back(rep);
    if (after_step) after_step(st, rep);
    if (!rep.passed()) {
      sum.passed = false;
      break;
    }
    st.verified = fingerprint(st);
    ++sum.completed;
  }
  for (const auto& b : st.pieces) sum.patches_per_piece.push_back(b.size());
  for (const auto& rec : st.history) sum.covered_caps.push_back(rec.z.index);
  sum.digest = digest(snapshot_json(st));
  return sum;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xfU];
    h >>= 4;
  }
  return out;
}

}  // namespace conglab
