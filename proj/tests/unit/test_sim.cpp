#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "conglab/errors.hpp"
#include "conglab/sim.hpp"
#include "conglab/transform.hpp"

using namespace conglab;

namespace {

struct SupportCount {
  std::size_t words = 0;
  std::size_t memberships = 0;
};

// Stage-zero M_g over the free group by breadth-first left extension on raw
// letter strings and bitmasks. No caps exist yet, so M+ equals M.
SupportCount stage_zero_support(const CongruenceSystem& sys, int k_bar) {
  const int r = sys.pieces();
  const std::uint64_t full = (std::uint64_t{1} << r) - 1;
  std::vector<std::uint64_t> L, R;
  for (const auto& c : sys.congruences()) {
    L.push_back(c.left.low_word());
    R.push_back(c.right.low_word());
  }
  struct Node {
    std::vector<int> letters;  // leftmost first; 2i+1 is f_i, 2i is f_i^-1
    std::uint64_t m;
  };
  SupportCount out;
  std::deque<Node> queue{{{}, full & ~(std::uint64_t{1} << (k_bar - 1))}};
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    ++out.words;
    out.memberships += static_cast<std::size_t>(std::popcount(n.m));
    if (out.words > 1'000'000) break;
    for (int l = 0; l < static_cast<int>(2 * sys.size()); ++l) {
      if (!n.letters.empty() && (l ^ 1) == n.letters.front()) continue;
      const std::size_t i = static_cast<std::size_t>(l / 2);
      const std::uint64_t dom = (l & 1) ? L[i] : R[i];
      const std::uint64_t ran = (l & 1) ? R[i] : L[i];
      std::uint64_t m = 0;
      if ((dom & ~n.m) == 0)
        m = ran;
      else if (((full & ~dom) & ~n.m) == 0)
        m = full & ~ran;
      if (m == 0) continue;
      Node next{{l}, m};
      next.letters.insert(next.letters.end(), n.letters.begin(), n.letters.end());
      queue.push_back(std::move(next));
    }
  }
  return out;
}

StageState five_set_state() {
  const auto sys = fixtures::five_set();
  return init(sys, simulation_realization(sys, sys.size(), 8), Variant::Section2);
}

StageState padded_state() {
  const auto t = transform_to_weak_plus_selfcomp(fixtures::padded_hausdorff());
  return init(t.system, simulation_realization(t.system, t.m_bar, 8), Variant::Section4, t.m_bar);
}

const StageState& five_set_after_one() {
  static const StageState st = [] {
    StageState s = five_set_state();
    step(s);
    return s;
  }();
  return st;
}

long double angular_radius(const Rational& s) { return 2.0L * std::asin(std::sqrt(static_cast<long double>(s.get_d())) / 2.0L); }

}  // namespace

TEST(SimInit, RejectsShallowCertificate) {
  const auto sys = fixtures::five_set();
  try {
    init(sys, simulation_realization(sys, sys.size(), 4), Variant::Section2);
    FAIL() << "init accepted a depth 4 certificate";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient freeness certificate"), std::string::npos);
  }
}

TEST(SimInit, RejectsSection4WithoutMbar) {
  const auto t = transform_to_weak_plus_selfcomp(fixtures::padded_hausdorff());
  auto real = simulation_realization(t.system, t.m_bar, 8);
  EXPECT_THROW(init(t.system, real, Variant::Section4), std::invalid_argument);
}

TEST(SimInit, LinkRadiusDefaults) {
  const auto t = transform_to_weak_plus_selfcomp(fixtures::hausdorff());
  const StageState h = init(t.system, simulation_realization(t.system, t.m_bar, 8), Variant::Section4, t.m_bar);
  EXPECT_EQ(h.link_radius, 16U);
  EXPECT_EQ(padded_state().link_radius, 64U);
}

TEST(SimStep, FirstStageMatchesRecursionOracle) {
  const StageState& st = five_set_after_one();
  ASSERT_EQ(st.history.size(), 1U);
  const StageRecord& rec = st.history[0];
  EXPECT_TRUE(rec.forced);
  EXPECT_EQ(rec.k_bar, 1);
  const SupportCount oracle = stage_zero_support(st.system, 1);
  EXPECT_EQ(rec.support, oracle.words);
  EXPECT_EQ(rec.patches_added, oracle.memberships);
  EXPECT_EQ(st.patch_count(), oracle.memberships);

  const auto x0 = st.graph.find(rec.x0);
  ASSERT_TRUE(x0.has_value());
  const PieceMask members = st.caps.membership(rec.x0, st.graph.approx(*x0), st.r());
  EXPECT_EQ(members, PieceMask::of(5, {2, 3, 4, 5}));
  EXPECT_TRUE(check_invariants(st).passed());
}

TEST(SimStep, RefusesSabotagedState) {
  StageState st = five_set_after_one();
  ASSERT_FALSE(st.tracked.empty());
  st.tracked[0].members = PieceMask::full(st.r());
  EXPECT_FALSE(check_invariants(st).tracked_consistent);
  try {
    step(st);
    FAIL() << "step ran on a sabotaged state";
  } catch (const InvariantViolation& e) {
    EXPECT_NE(std::string(e.what()).find("step refused"), std::string::npos);
  }
}

TEST(SimStep, DetectsFullIntersection) {
  StageState st = five_set_after_one();
  const StageRecord& rec = st.history[0];
  st.caps.insert(Cap{rec.x0, rec.radius_sq}, PieceMask::of(st.r(), {1}));
  st.pieces[0].push_back(Patch{Word::identity(), 0, rec.x0, rec.radius_sq});
  const InvariantReport rep = check_invariants(st);
  EXPECT_FALSE(rep.no_full_intersection);
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.witness.has_value());
}

TEST(SimCaps, RelationMatchesAngles) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9), lev(0, 8);
  std::size_t decided = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Cap a{from_stereographic(frac(num(rng), den(rng)), frac(num(rng), den(rng))), frac(1, 1 << lev(rng))};
    const Cap b{from_stereographic(frac(num(rng), den(rng)), frac(num(rng), den(rng))), frac(2, 1 << lev(rng))};
    const long double ta = angular_radius(a.radius_sq), tb = angular_radius(b.radius_sq);
    const long double d = std::clamp(static_cast<long double>(dot(a.center, b.center).get_d()), -1.0L, 1.0L);
    const long double phi = std::acos(d);
    const CapRelation rel = relate(a, b);
    constexpr long double eps = 1e-9L;
    if (phi > ta + tb + eps) {
      EXPECT_EQ(rel, CapRelation::Disjoint);
    } else if (phi < ta + tb - eps && phi > std::fabs(ta - tb) + eps) {
      EXPECT_EQ(rel, CapRelation::Overlapping);
    } else if (phi < tb - ta - eps) {
      EXPECT_EQ(rel, CapRelation::FirstInsideSecond);
    } else if (phi < ta - tb - eps) {
      EXPECT_EQ(rel, CapRelation::SecondInsideFirst);
    } else {
      continue;
    }
    ++decided;
  }
  EXPECT_GT(decided, 2500U);
  const Cap c{from_stereographic(frac(1, 2), frac(1, 3)), frac(1, 16)};
  EXPECT_EQ(relate(c, c), CapRelation::Equal);
}

TEST(SimCaps, ContainmentAndBoundaryAreExact) {
  const ExactPoint north(0, 0, 1);
  const ExactPoint p(frac(3, 5), 0, frac(4, 5));  // chord2 to north = 2/5
  EXPECT_FALSE(cap_contains(Cap{north, frac(2, 5)}, p));
  EXPECT_TRUE(cap_boundary(Cap{north, frac(2, 5)}, p));
  EXPECT_TRUE(cap_closure_contains(Cap{north, frac(2, 5)}, p));
  EXPECT_TRUE(cap_contains(Cap{north, frac(41, 100)}, p));
}

TEST(SimSchedule, WholeSphereFirstThenEveryCenterAndLevel) {
  const BaseSchedule sched(4);
  for (std::size_t n = 0; n < 4; ++n) EXPECT_TRUE(sched.entry(n).whole);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 4; n < 4 + 200; ++n) {
    const BaseCap z = sched.entry(n);
    EXPECT_FALSE(z.whole);
    EXPECT_TRUE(z.cap.center.on_sphere());
    EXPECT_EQ(z.cap.radius_sq * (mpz_class(1) << (2 * z.radius_level)), 1);
    seen.insert({z.center_index, z.radius_level});
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_TRUE(seen.count({i, j})) << i << ' ' << j;
}

TEST(SimSchedule, DenseRationalsHitSmallFractions) {
  std::set<std::pair<long, long>> found;
  for (std::size_t n = 0; n < 2000; ++n) {
    const Rational q = dense_rational(n);
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) found.insert({q.get_num().get_si(), q.get_den().get_si()});
  }
  std::size_t distinct = 0;
  for (long p = -5; p <= 5; ++p)
    for (long q = 1; q <= 5; ++q) {
      const Rational x = frac(p, q);
      EXPECT_TRUE(found.count({x.get_num().get_si(), x.get_den().get_si()})) << p << '/' << q;
      ++distinct;
    }
  EXPECT_GT(distinct, 0U);
  std::set<std::string> first;
  for (std::size_t n = 0; n < 500; ++n) EXPECT_TRUE(first.insert(dense_rational(n).get_str()).second);
}

TEST(SimSchedule, CapCandidatesStayInsideTheCap) {
  const BaseSchedule sched(3);
  for (std::size_t n = 3; n < 40; ++n) {
    const BaseCap z = sched.entry(n);
    for (std::size_t k = 0; k < 24; ++k) {
      const ExactPoint c = cap_candidate(z, k);
      EXPECT_TRUE(c.on_sphere());
      EXPECT_TRUE(cap_contains(z.cap, c)) << n << ' ' << k;
    }
  }
}

TEST(SimRun, ZeroStepsLeavesInitialState) {
  StageState st = padded_state();
  const std::string before = snapshot_json(st);
  const RunSummary sum = run(st, 0);
  EXPECT_EQ(sum.completed, 0U);
  EXPECT_TRUE(sum.passed);
  EXPECT_EQ(st.patch_count(), 0U);
  EXPECT_EQ(snapshot_json(st), before);
  EXPECT_EQ(sum.digest, digest(before));
}

TEST(SimRun, DeterministicAndInvariantEachStage) {
  StageState a = padded_state(), b = padded_state();
  std::size_t observed = 0;
  const RunSummary sa = run(a, 6, [&](const StageState&, const InvariantReport& rep) {
    ++observed;
    EXPECT_TRUE(rep.passed()) << describe(rep);
  });
  const RunSummary sb = run(b, 6);
  EXPECT_EQ(observed, 6U);
  EXPECT_TRUE(sa.passed);
  EXPECT_EQ(sa.completed, 6U);
  EXPECT_EQ(sa.digest, sb.digest);
  EXPECT_EQ(snapshot_json(a), snapshot_json(b));
  // every piece receives patches once its forced stage has run
  for (auto n : sa.patches_per_piece) EXPECT_GT(n, 0U);
}

TEST(SimRun, HausdorffTransformedStopsWithSupportError) {
  const auto t = transform_to_weak_plus_selfcomp(fixtures::hausdorff());
  StageState st = init(t.system, simulation_realization(t.system, t.m_bar, 8), Variant::Section4, t.m_bar);
  const RunSummary sum = run(st, 1);
  EXPECT_FALSE(sum.passed);
  EXPECT_FALSE(sum.budget_error);
  ASSERT_TRUE(sum.error.has_value());
  EXPECT_NE(sum.error->find("M support"), std::string::npos);
}

TEST(SimSnapshot, RoundTripAndResume) {
  StageState st = padded_state();
  run(st, 3);
  const std::string text = snapshot_json(st);
  StageState loaded = load_snapshot(text);
  EXPECT_EQ(snapshot_json(loaded), text);
  EXPECT_TRUE(check_invariants(loaded).passed());
  run(st, 2);
  run(loaded, 2);
  EXPECT_EQ(snapshot_json(loaded), snapshot_json(st));
}

TEST(SimSnapshot, RejectsForeignDocuments) {
  EXPECT_THROW(load_snapshot("not json"), std::invalid_argument);
  EXPECT_THROW(load_snapshot(R"({"schema": "other", "version": 1})"), std::invalid_argument);
  EXPECT_THROW(load_snapshot(R"({"schema": "conglab-stage-snapshot", "version": 99})"), std::invalid_argument);
}

TEST(SimSvg, OneCirclePerPatchAndDeterministic) {
  StageState st = padded_state();
  run(st, 4);
  const std::string svg = render_svg(st, ViewAxis::Z);
  EXPECT_EQ(svg, render_svg(st, ViewAxis::Z));
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, st.patch_count() + 1);  // plus the outline
  for (int k = 1; k <= st.r(); ++k) EXPECT_NE(svg.find("piece-" + std::to_string(k)), std::string::npos);
  EXPECT_NE(render_svg(st, ViewAxis::X), svg);
}
