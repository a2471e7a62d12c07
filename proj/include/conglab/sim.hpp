#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "conglab/graph.hpp"
#include "conglab/partition.hpp"
#include "conglab/sphere.hpp"
#include "conglab/system.hpp"
#include "conglab/words.hpp"

namespace conglab {

// ---------------------------------------------------------------------------
// Caps

// Open spherical cap {y : chord2(y, center) < radius_sq}, radius_sq <= 2.
struct Cap {
  ExactPoint center;
  Rational radius_sq;
};

enum class CapRelation { Equal, Disjoint, FirstInsideSecond, SecondInsideFirst, Overlapping };

bool cap_contains(const Cap& c, const ExactPoint& p);
bool cap_boundary(const Cap& c, const ExactPoint& p);
bool cap_closure_contains(const Cap& c, const ExactPoint& p);
CapRelation relate(const Cap& a, const Cap& b);

using Approx = std::array<double, 3>;
Approx approximate(const ExactPoint& p);

// Distinct caps, each with the pieces it belongs to. Lookups go through a
// coarse grid on double coordinates; every answer is decided exactly.
class CapIndex {
 public:
  std::size_t insert(const Cap& cap, const PieceMask& pieces);
  std::size_t size() const { return caps_.size(); }
  const Cap& cap(std::size_t i) const { return caps_[i]; }
  const PieceMask& pieces(std::size_t i) const { return pieces_[i]; }
  double radius(std::size_t i) const { return radius_[i]; }
  const Approx& center_approx(std::size_t i) const { return center_[i]; }

  // caps that may meet the ball of the given radius around p, ascending ids
  std::vector<std::size_t> near(const Approx& p, double radius) const;
  PieceMask membership(const ExactPoint& p, const Approx& a, int r) const;
  bool on_boundary(const ExactPoint& p, const Approx& a) const;
  // caps with piece k whose closure holds p
  bool closure_hits(const ExactPoint& p, const Approx& a, int k) const;

 private:
  std::vector<std::int64_t> cells_of(const Approx& lo, const Approx& hi) const;

  std::vector<Cap> caps_;
  std::vector<PieceMask> pieces_;
  std::vector<Approx> center_;
  std::vector<double> radius_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> grid_;
  std::unordered_map<ExactPoint, std::vector<std::size_t>, ExactPointHash> by_center_;
};

// ---------------------------------------------------------------------------
// Base schedule

// n-th term of a fixed enumeration of the rationals (0, 1, -1, 1/2, -1/2, 2,
// ...), from the Calkin-Wilf sequence.
Rational dense_rational(std::size_t n);
std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t n);

struct BaseCap {
  std::size_t index = 0;
  bool whole = false;  // the whole sphere
  std::size_t center_index = 0;
  std::size_t radius_level = 0;  // radius_sq = 4^-level
  Rational u, v;                 // stereographic coordinates of the center
  Cap cap;
};

class BaseSchedule {
 public:
  BaseSchedule() = default;
  explicit BaseSchedule(int r) : r_(r) {}
  int whole_copies() const { return r_; }
  // Entries 0..r-1 are the whole sphere; entry r+n is the cap with center
  // index i and radius level j where (i, j) is the n-th Cantor pair.
  BaseCap entry(std::size_t n) const;

 private:
  int r_ = 0;
};

// Candidate points for x0, in search order. For the whole sphere: the
// stereographic images of the dense rational pairs. For a cap: points near
// its center at shrinking dyadic offsets, small enough to stay inside it.
ExactPoint whole_sphere_candidate(std::size_t n);
ExactPoint cap_candidate(const BaseCap& z, std::size_t n);

// ---------------------------------------------------------------------------
// Orbit points

// Exact points met so far, deduplicated, with lazily computed generator
// images.
class OrbitGraph {
 public:
  using Id = std::uint32_t;
  static constexpr Id kNone = 0xffffffffU;

  void reset(std::size_t generators) { *this = OrbitGraph(); gens_ = generators; }
  std::pair<Id, bool> intern(const ExactPoint& p);
  std::optional<Id> find(const ExactPoint& p) const;
  const ExactPoint& point(Id id) const { return points_[id]; }
  const Approx& approx(Id id) const { return approx_[id]; }
  // f_gen(x) or f_gen^-1(x)
  Id neighbor(Id id, std::size_t gen, bool positive, const GroupRealization& real);
  // g(x) for the point x with the given id
  Id walk(Id id, const Word& g, const GroupRealization& real);
  std::size_t size() const { return points_.size(); }
  void truncate(std::size_t n);

 private:
  std::size_t gens_ = 0;
  std::vector<ExactPoint> points_;
  std::vector<Approx> approx_;
  std::vector<Id> next_;  // 2 * gens_ slots per point
  std::unordered_map<ExactPoint, Id, ExactPointHash> index_;
};

// ---------------------------------------------------------------------------
// Stage state

struct Patch {
  Word word;
  std::size_t stage = 0;
  ExactPoint base_center;
  Rational radius_sq;
};

struct TrackedPoint {
  std::size_t stage = 0;
  Word word;  // the point is word(x0) of its stage
  OrbitGraph::Id id = OrbitGraph::kNone;
  PieceMask members;
};

struct StageRecord {
  std::size_t stage = 0;
  BaseCap z;
  bool forced = false;  // one of the first r whole-sphere entries
  ExactPoint x0;
  int k_bar = 0;
  std::size_t attempts = 0;  // x0 candidates tried
  std::size_t support = 0;   // words with M nonempty
  std::size_t longest_trace = 0;
  std::size_t s_size = 0;
  std::size_t s_prime_size = 0;
  Rational radius_sq;
  std::size_t patches_added = 0;
  OrbitGraph::Id x0_id = OrbitGraph::kNone;
};

struct SimConfig {
  std::size_t min_certified_depth = 8;
  // A link is active when some occupied point is within this many links of
  // an endpoint.
  std::size_t activity_radius = 0;
  std::size_t axis_depth = 3;  // x0 is not fixed by any word this short
  std::size_t x0_attempts = 256;
  std::size_t link_radius = 0;  // 0: 2^r (Section2) or 2^(r+1) (Section4)
};

struct StageState {
  CongruenceSystem system;
  Variant variant = Variant::Section2;
  std::size_t m_bar = 0;
  GroupRealization realization;
  SimConfig config;
  std::size_t link_radius = 0;
  std::size_t stage = 0;
  BaseSchedule schedule;
  std::vector<std::vector<Patch>> pieces;  // B_k is pieces[k-1]
  std::vector<TrackedPoint> tracked;
  std::vector<StageRecord> history;
  CapIndex caps;
  mutable OrbitGraph graph;
  std::uint64_t verified = 0;  // fingerprint of the last state that passed the checks

  int r() const { return system.pieces(); }
  const Presentation& presentation() const { return realization.presentation; }
  std::size_t patch_count() const;
};

// Committed generators for the witness group, certified to the given depth.
GroupRealization simulation_realization(const CongruenceSystem& sys, std::size_t m_bar, std::size_t depth);

// Throws std::invalid_argument "insufficient freeness certificate" when the
// realization is certified below config.min_certified_depth, and for a
// realization of the wrong group.
StageState init(const CongruenceSystem& sys, GroupRealization realization, Variant variant,
                std::size_t m_bar = CongruenceDigraph::npos, SimConfig config = {});

struct InvariantReport {
  bool no_full_intersection = true;  // no point lies in every piece
  bool congruences = true;           // x in L_i iff f_i x in R_i, at tracked points
  bool finite_components = true;     // active components are finite
  bool caps_nested = true;           // disjoint, equal or included
  bool progress = true;
  bool tracked_consistent = true;  // stored memberships agree with the patches
  std::size_t patches = 0;
  std::size_t distinct_caps = 0;
  std::size_t tracked = 0;
  std::size_t active_links = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  std::optional<std::string> witness;

  bool passed() const {
    return no_full_intersection && congruences && finite_components && caps_nested && progress && tracked_consistent;
  }
};

InvariantReport check_invariants(const StageState& state);
std::string describe(const InvariantReport& rep);

// One induction step. Throws InvariantViolation when the state does not
// satisfy the invariants, BudgetExceeded "no valid x0 found in budget" when the
// candidate search runs out, BudgetExceeded for the support searches.
void step(StageState& state);

struct RunSummary {
  std::size_t requested = 0;
  std::size_t completed = 0;
  bool passed = true;
  std::vector<InvariantReport> reports;  // after each completed step
  std::optional<std::string> error;
  bool budget_error = false;  // the error was a search running out of budget
  std::vector<std::size_t> patches_per_piece;
  std::vector<std::size_t> covered_caps;  // schedule entries consumed
  std::string digest;                      // of the final snapshot
};

using StepObserver = std::function<void(const StageState&, const InvariantReport&)>;
RunSummary run(StageState& state, std::size_t steps, const StepObserver& after_step = {});

enum class ViewAxis { X, Y, Z };
std::string render_svg(const StageState& state, ViewAxis axis = ViewAxis::Z);

// Schema-versioned JSON with exact fractions. load_snapshot rebuilds the
// full state, recomputing every point from the recorded words and x0s.
std::string snapshot_json(const StageState& state);
StageState load_snapshot(std::string_view json);
std::string digest(std::string_view text);  // 16 hex digits, FNV-1a

}  // namespace conglab
