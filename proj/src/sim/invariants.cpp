#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "conglab/budget.hpp"
#include "conglab/sim.hpp"

namespace conglab {

namespace {

class Checker {
 public:
  explicit Checker(const StageState& st) : st_(st), r_(st.r()) {}

  InvariantReport run() {
    rep_.patches = st_.patch_count();
    rep_.distinct_caps = st_.caps.size();
    rep_.tracked = st_.tracked.size();
    memberships();
    congruences();
    components();
    nesting();
    progress();
    return rep_;
  }

 private:
  using Id = OrbitGraph::Id;

  const PieceMask& member(Id id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    PieceMask m = st_.caps.membership(st_.graph.point(id), st_.graph.approx(id), r_);
    return memo_.emplace(id, std::move(m)).first->second;
  }

  Id image(Id id, std::size_t gen, bool positive) { return st_.graph.neighbor(id, gen, positive, st_.realization); }

  void fail(bool& flag, const std::string& what) {
    flag = false;
    if (!rep_.witness) rep_.witness = what;
  }

  std::string where(const TrackedPoint& t) const {
    return format_word(t.word, st_.presentation()) + " (x0 of stage " + std::to_string(t.stage) + ")";
  }

  void memberships() {
    for (const auto& t : st_.tracked) {
      const PieceMask& m = member(t.id);
      if (m != t.members)
        fail(rep_.tracked_consistent, "stored membership " + t.members.to_string() + " of " + where(t) + " differs from " + m.to_string());
      if (m.is_full()) fail(rep_.no_full_intersection, "full intersection: " + where(t) + " lies in every piece");
    }
  }

  // x in L_i iff f_i x in R_i at every tracked point x and every witness f_i.
  void congruences() {
    const CongruenceSystem& sys = st_.system;
    for (const auto& t : st_.tracked) {
      for (std::size_t i = 0; i < sys.size(); ++i) {
        const PieceMask mx = member(t.id);
        const PieceMask& my = member(image(t.id, i, true));
        const Congruence& c = sys[i];
        bool direct = c.left.subset_of(mx) == c.right.subset_of(my);
        bool comp = c.left.complement().subset_of(mx) == c.right.complement().subset_of(my);
        if (!direct || !comp)
          fail(rep_.congruences, "congruence " + std::to_string(i + 1) + " at " + where(t) + ": x in " + mx.to_string() +
                                     ", f x in " + my.to_string());
      }
    }
  }

  bool near(Id y) {
    const std::size_t a = st_.config.activity_radius;
    if (a == 0) return !member(y).empty();
    if (auto it = near_.find(y); it != near_.end()) return it->second;
    std::unordered_set<Id> seen{y};
    std::vector<Id> frontier{y};
    bool hit = false;
    for (std::size_t d = 0; d <= a && !hit; ++d) {
      std::vector<Id> next;
      for (Id w : frontier) {
        if (!member(w).empty()) {
          hit = true;
          break;
        }
        if (d == a) continue;
        for (std::size_t g = 0; g < st_.system.size(); ++g)
          for (bool pos : {false, true}) {
            Id z = image(w, g, pos);
            if (seen.insert(z).second) next.push_back(z);
          }
      }
      frontier = std::move(next);
    }
    near_.emplace(y, hit);
    return hit;
  }

  // Finite components: breadth-first search along active links from every tracked point.
  void components() {
    const std::size_t budget = state_budget();
    std::unordered_set<Id> visited;
    std::size_t directed = 0;
    for (const auto& t : st_.tracked) {
      if (visited.count(t.id)) continue;
      ++rep_.components;
      std::deque<Id> queue{t.id};
      visited.insert(t.id);
      std::size_t size = 0;
      while (!queue.empty()) {
        Id y = queue.front();
        queue.pop_front();
        ++size;
        if (size > budget) {
          fail(rep_.finite_components, "infinite component: active component of " + where(t) + " exceeds " + std::to_string(budget) + " points");
          return;
        }
        const bool ny = near(y);
        for (std::size_t g = 0; g < st_.system.size(); ++g)
          for (bool pos : {false, true}) {
            Id z = image(y, g, pos);
            if (!(ny || near(z))) continue;
            ++directed;
            if (visited.insert(z).second) queue.push_back(z);
          }
      }
      rep_.largest_component = std::max(rep_.largest_component, size);
    }
    rep_.active_links = directed / 2;
  }

  void nesting() {
    const CapIndex& caps = st_.caps;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      for (std::size_t j : caps.near(caps.center_approx(i), caps.radius(i))) {
        if (j <= i) continue;
        if (relate(caps.cap(i), caps.cap(j)) == CapRelation::Overlapping) {
          fail(rep_.caps_nested, "caps around " + caps.cap(i).center.to_string() + " and " + caps.cap(j).center.to_string() +
                                     " overlap without nesting");
          return;
        }
      }
    }
  }

  // Each consumed base cap holds its x0, and x0 lies in every piece but k_bar.
  void progress() {
    for (const auto& rec : st_.history) {
      const std::string at = "stage " + std::to_string(rec.stage);
      if (!rec.z.whole && !cap_contains(rec.z.cap, rec.x0)) fail(rep_.progress, at + ": x0 outside its base cap");
      if (rec.forced && rec.k_bar != static_cast<int>(rec.stage) + 1) fail(rep_.progress, at + ": forced stage with wrong k_bar");
      PieceMask want = PieceMask::full(r_);
      want.reset(rec.k_bar);
      if (!want.subset_of(member(rec.x0_id)))
        fail(rep_.progress, at + ": x0 in " + member(rec.x0_id).to_string() + ", expected every piece but " + std::to_string(rec.k_bar));
    }
  }

  const StageState& st_;
  int r_;
  InvariantReport rep_;
  std::unordered_map<Id, PieceMask> memo_;
  std::unordered_map<Id, bool> near_;
};

}  // namespace

InvariantReport check_invariants(const StageState& state) { return Checker(state).run(); }

std::string describe(const InvariantReport& rep) {
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  std::string s = "intersection " + std::string(mark(rep.no_full_intersection)) + ", congruences " + mark(rep.congruences) + ", components " +
                  mark(rep.finite_components) + ", caps " + mark(rep.caps_nested) + ", progress " + mark(rep.progress) +
                  ", tracked " + mark(rep.tracked_consistent) + "; " + std::to_string(rep.patches) + " patches, " +
                  std::to_string(rep.distinct_caps) + " caps, " + std::to_string(rep.tracked) + " tracked points, " +
                  std::to_string(rep.active_links) + " active links, " + std::to_string(rep.components) +
                  " components (largest " + std::to_string(rep.largest_component) + ")";
  if (rep.witness) s += "; " + *rep.witness;
  return s;
}

}  // namespace conglab
