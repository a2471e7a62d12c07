#include <gtest/gtest.h>

#include <map>
#include <set>

#include "conglab/errors.hpp"
#include "conglab/partition.hpp"
#include "conglab/sphere.hpp"
#include "conglab/transform.hpp"
#include "oracles.hpp"

using namespace conglab;

namespace {

TransformResult hausdorff_transformed() { return transform_to_weak_plus_selfcomp(fixtures::hausdorff()); }

std::vector<Word> even_words(const Presentation& p, std::size_t L) {
  std::vector<Word> out;
  for (const auto& w : enumerate_ball(p, L))
    if (tau_parity(w, p) == Parity::Even) out.push_back(w);
  return out;
}

}  // namespace

TEST(Coloring, NoWeakCongruences) {
  CongruenceSystem s = fixtures::swap();
  TwoColoring c(s, 0);
  EXPECT_EQ(c.color(PieceMask::of(2, {1})), 0);
  EXPECT_EQ(c.color(PieceMask::of(2, {2})), 1);
}

TEST(Coloring, HausdorffTransformed) {
  auto t = hausdorff_transformed();
  ASSERT_EQ(t.m_bar, 2u);
  TwoColoring c(t.system, t.m_bar);
  for (auto m : {std::initializer_list<int>{1}, {2}, {3}}) EXPECT_EQ(c.color(PieceMask::of(3, m)), 0);
  for (auto m : {std::initializer_list<int>{2, 3}, {1, 3}, {1, 2}}) EXPECT_EQ(c.color(PieceMask::of(3, m)), 1);
}

TEST(Coloring, MatchesClassOracle) {
  std::vector<std::pair<CongruenceSystem, std::size_t>> cases{{fixtures::five_set(), 5}};
  for (const auto& s : oracle::small_systems()) {
    auto t = transform_to_weak_plus_selfcomp(s);
    cases.emplace_back(t.system, t.m_bar);
  }
  for (const auto& [sys, m_bar] : cases) {
    TwoColoring c(sys, m_bar);
    const int r = sys.pieces();
    auto cls = oracle::brute_classes(sys.prefix(m_bar));
    const std::uint64_t full = (std::uint64_t{1} << r) - 1;
    // least mask of each class, by brute force
    std::map<int, std::uint64_t> least;
    for (std::uint64_t b = 1; b < full; ++b)
      if (!least.count(cls[b])) least[cls[b]] = b;
    for (std::uint64_t b = 1; b < full; ++b) {
      PieceMask m = PieceMask::from_bits(r, b);
      int expect = least[cls[b]] < least[cls[full ^ b]] ? 0 : 1;
      ASSERT_EQ(c.color(m), expect) << print_system(sys) << m.to_string();
      ASSERT_NE(c.color(m), c.color(m.complement()));
    }
    for (std::size_t i = 0; i < m_bar; ++i) ASSERT_EQ(c.color(sys[i].left), c.color(sys[i].right));
  }
}

TEST(Coloring, RejectsNonWeakPrefix) {
  EXPECT_THROW(TwoColoring(fixtures::hausdorff(), 3), std::invalid_argument);
}

TEST(GroupPartition, Z4MicroModel) {
  CongruenceSystem s = fixtures::swap();
  Presentation p = witness_presentation(s, 0);
  GroupPartition part(s, 0, Word::identity());
  const auto group = enumerate_ball(p, 3);
  ASSERT_EQ(group.size(), 4u);
  std::map<std::string, int> piece;
  for (const auto& g : group) piece[format_word(g, p)] = part.assign(g);
  EXPECT_EQ(piece["e"], 1);
  EXPECT_EQ(piece["t1^2"], 1);
  EXPECT_EQ(piece["t1"], 2);
  EXPECT_EQ(piece["t1^3"], 2);
  // tau maps A_1 onto A_2 and A_2 onto A_1
  for (const auto& g : group) EXPECT_NE(part.assign(multiply(Word::generator(p, 0), g, p)), part.assign(g));
  EXPECT_TRUE(verify_group_partition(part, 3).passed);
}

TEST(GroupPartition, IdentityAnchorTotal) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  GroupPartition part(t.system, t.m_bar, Word::identity());
  EXPECT_EQ(part.end_segment_case(), EndSegmentCase::Identity);
  for (const auto& g : enumerate_ball(p, 6)) {
    int k = part.assign(g);
    ASSERT_GE(k, 1);
    ASSERT_LE(k, 3);
    ASSERT_EQ(part.assign_memoized(g), k) << format_word(g, p);
  }
}

TEST(GroupPartition, HausdorffAnchor) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  Word w = parse_word("s1^2", p);
  GroupPartition part(t.system, t.m_bar, w);
  EXPECT_EQ(part.assign(w), part.assign(Word::identity()));
  auto a = verify_group_partition(part, 6, Kernel::Serial);
  auto b = verify_group_partition(part, 6, Kernel::Parallel);
  EXPECT_TRUE(a.passed);
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(a.words, ball_size(p, 6));
  EXPECT_EQ(a.words, b.words);
  EXPECT_EQ(a.checks, 3 * a.words);
  EXPECT_FALSE(oracle::brute_partition_violation(part, 5));
}

TEST(GroupPartition, RejectsOddParity) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  EXPECT_THROW(GroupPartition(t.system, t.m_bar, parse_word("t1", p)), std::invalid_argument);
  EXPECT_THROW(GroupPartition(t.system, t.m_bar, parse_word("s1 t1^3", p)), std::invalid_argument);
  // a non-self-complement congruence cannot have an order-four witness
  EXPECT_THROW(GroupPartition(t.system, 1, Word::identity()), std::invalid_argument);
}

TEST(GroupPartition, EveryAnchorOnSmallSystems) {
  std::set<EndSegmentCase> seen;
  std::size_t built = 0;
  std::vector<CongruenceSystem> inputs = oracle::small_systems();
  for (auto s : {fixtures::padded_hausdorff(), fixtures::double_tau(), fixtures::hausdorff()}) inputs.push_back(s);
  for (std::size_t n = 0; n < inputs.size(); n += 3) {
    auto t = transform_to_weak_plus_selfcomp(inputs[n]);
    if (t.system.empty()) continue;
    Presentation p = witness_presentation(t.system, t.m_bar);
    auto anchors = even_words(p, 3);
    for (std::size_t a = 0; a < anchors.size(); a += 7) {
      GroupPartition part(t.system, t.m_bar, anchors[a]);
      seen.insert(part.end_segment_case());
      ++built;
      ASSERT_EQ(part.assign(anchors[a]), part.assign(Word::identity()));
      auto rep = verify_group_partition(part, 4, Kernel::Serial);
      ASSERT_TRUE(rep.passed) << print_system(t.system) << format_word(anchors[a], p) << "\n"
                              << describe(*rep.violation, p);
      ASSERT_FALSE(oracle::brute_partition_violation(part, 3));
    }
  }
  // a tau block alone: every range is the complement of the next domain
  for (const char* text : {"t1^2", "t1 t2 t1^3 t2^3"}) {
    auto t = transform_to_weak_plus_selfcomp(fixtures::double_tau());
    Presentation p = witness_presentation(t.system, t.m_bar);
    GroupPartition part(t.system, t.m_bar, parse_word(text, p));
    seen.insert(part.end_segment_case());
    EXPECT_TRUE(verify_group_partition(part, 5).passed) << text;
  }
  EXPECT_GT(built, 100u);
  EXPECT_EQ(seen.size(), 3u);
}

TEST(GroupPartition, FaultInjection) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  GroupPartition part(t.system, t.m_bar, parse_word("s1^2", p));
  Word victim = parse_word("s2 t1", p);
  int k = part.assign(victim);
  part.inject_fault(victim, k == 1 ? 2 : 1);
  for (Kernel kernel : {Kernel::Serial, Kernel::Parallel}) {
    auto rep = verify_group_partition(part, 5, kernel);
    ASSERT_FALSE(rep.passed);
    ASSERT_TRUE(rep.violation);
    auto brute = oracle::brute_partition_violation(part, 5);
    ASSERT_TRUE(brute);
    EXPECT_EQ(rep.violation->g, brute->first);
    EXPECT_EQ(rep.violation->congruence, brute->second);
    EXPECT_TRUE(rep.violation->g == victim || rep.violation->image == victim) << describe(*rep.violation, p);
  }
}

TEST(Mg, IdentityAndFiveSetStep) {
  auto f = fixtures::five_set();
  MgState st(f, Variant::Section2, f.size(), 1);
  Presentation p = st.presentation();
  EXPECT_EQ(st.compute(Word::identity()).m, PieceMask::of(5, {2, 3, 4, 5}));
  // L_1^c = {2 3 4 5} lies in M+ at the identity, so M = R_1^c
  EXPECT_EQ(st.compute(parse_word("s1", p)).m, PieceMask::of(5, {1, 3, 4, 5}));
  // L_2 = {2} lies in M+ at the identity, so M = R_2
  EXPECT_EQ(st.compute(parse_word("s2", p)).m, PieceMask::of(5, {3}));
  // once M is empty it stays empty
  Word dead;
  for (const auto& g : enumerate_ball(p, 2))
    if (st.compute(g).m.empty()) {
      dead = g;
      break;
    }
  ASSERT_FALSE(dead.is_identity());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Word h = left_multiply(letter_code(i, true), dead, p);
    if (h.length() > dead.length()) {
      EXPECT_TRUE(st.compute(h).m.empty());
    }
  }
}

TEST(Mg, EdgePropertyFiveSet) {
  auto f = fixtures::five_set();
  MgState st(f, Variant::Section2, f.size(), 1);
  auto rep = mg_edge_property_check(st, 4);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.trace_bound, 32u);
  EXPECT_LT(rep.longest_trace, 32u);
  EXPECT_GT(rep.traces, 0u);
  EXPECT_FALSE(rep.linkage_violation);
  for (int k = 2; k <= 5; ++k) {
    MgState other(f, Variant::Section2, f.size(), k);
    EXPECT_TRUE(mg_edge_property_check(other, 3).passed) << k;
  }
}

TEST(Mg, EdgePropertySection4) {
  for (auto s : {fixtures::padded_hausdorff(), fixtures::double_tau(), fixtures::swap()}) {
    auto t = transform_to_weak_plus_selfcomp(s);
    for (int k = 1; k <= t.system.pieces(); ++k) {
      MgState st(t.system, Variant::Section4, t.m_bar, k);
      auto rep = mg_edge_property_check(st, 4);
      EXPECT_TRUE(rep.passed) << print_system(t.system) << " k=" << k;
      EXPECT_LT(rep.longest_trace, rep.trace_bound);
    }
  }
}

TEST(Mg, CorruptedOracle) {
  auto f = fixtures::five_set();
  Presentation p = Presentation::free_group(5);
  Word bad = parse_word("s1^-2", p);
  MgState st(f, Variant::Section2, f.size(), 1, [&](const Word& g) {
    PieceMask m(5);
    if (g == bad) m.set(1);
    return m;
  });
  auto rep = mg_edge_property_check(st, 3);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.equivalence_violation);
  EXPECT_EQ(rep.equivalence_violation->first, bad);
  EXPECT_EQ(rep.equivalence_violation->second, 0u);
}

TEST(Mg, ImpossibleBranchIsAnError) {
  auto f = fixtures::five_set();
  // the oracle puts x0 itself in the excluded piece, so M+ at the identity is everything
  MgState st(f, Variant::Section2, f.size(), 1, [](const Word& g) {
    PieceMask m(5);
    if (g.is_identity()) m.set(1);
    return m;
  });
  EXPECT_THROW(st.compute(parse_word("s1", Presentation::free_group(5))), InvariantViolation);
}

TEST(Orbit, CanonicalFormExamples) {
  Presentation p(2, 1);
  OrbitModel om(p, parse_word("s1 s2", p));
  EXPECT_TRUE(om.canonical_form(parse_word("s1 s2", p)).is_identity());
  Word g = parse_word("s2 s1^2", p);
  EXPECT_EQ(om.canonical_form(g), g);
  // ends in rho' = s1^-1: move to g w
  EXPECT_EQ(format_word(om.canonical_form(parse_word("s2 s1^-1", p)), p), "s2^2");

  OrbitModel sq(p, parse_word("t1^2", p));
  EXPECT_TRUE(sq.tau_square());
  EXPECT_TRUE(sq.canonical_form(parse_word("t1^2", p)).is_identity());
  EXPECT_EQ(format_word(sq.canonical_form(parse_word("t1", p)), p), "t1");
  EXPECT_EQ(format_word(sq.canonical_form(parse_word("t1^3", p)), p), "t1");

  EXPECT_THROW(OrbitModel(p, parse_word("t1", p)), std::invalid_argument);
  EXPECT_THROW(OrbitModel(p, parse_word("s1 s2 s1^-1", p)), std::invalid_argument);
  EXPECT_THROW(OrbitModel(p, parse_word("t1 s1 t1", p)), std::invalid_argument);
  EXPECT_THROW(OrbitModel(p, Word::identity()), std::invalid_argument);
}

TEST(Orbit, CanonicalFormUniqueOnBall) {
  Presentation p(2, 1);
  for (const char* text : {"s1 s2", "s1^2", "t1^2", "t1 s1 t1^3 s2", "s2^-1 t1^2", "t1^2 s1", "t1^3 s2^-1 t1 s1"}) {
    OrbitModel om(p, parse_word(text, p));
    const Word& w = om.fixed_word();
    for (const auto& g : enumerate_ball(p, 4)) {
      Word c = om.canonical_form(g);
      ASSERT_TRUE(om.is_canonical(c));
      // exactly one canonical word among g w^j, |j| <= 6
      std::set<std::vector<Letter>> canon;
      for (long j = -6; j <= 6; ++j) {
        Word v = multiply(g, power(w, j, p), p);
        if (om.is_canonical(v)) canon.insert(v.letters());
      }
      ASSERT_EQ(canon.size(), 1u) << text << " " << format_word(g, p);
      ASSERT_EQ(*canon.begin(), c.letters());
      for (long j = -3; j <= 3; ++j) ASSERT_EQ(om.canonical_form(multiply(g, power(w, j, p), p)), c);
    }
  }
}

// With w = tau_1 s1 tau_1^3 s2 the coset of tau_1 has no element avoiding
// both w and a final tau_1: the excluded suffix has to be tau_1^(4-a).
TEST(Orbit, ShortTauLeadNeedsLongerForbiddenSuffix) {
  Presentation p(2, 1);
  Word w = parse_word("t1 s1 t1^3 s2", p);
  Word t = parse_word("t1", p);
  for (long j = -4; j <= 4; ++j) {
    Word v = multiply(t, power(w, j, p), p);
    auto l = v.letters();
    EXPECT_TRUE(ends_with(v, w) || l.back() == letter_code(2, true)) << format_word(v, p);
  }
  OrbitModel om(p, w);
  EXPECT_EQ(format_word(om.forbidden_suffix(), p), "t1^3");
  EXPECT_EQ(om.canonical_form(t), t);
  OrbitModel three(p, parse_word("t1^3 s1 t1 s2", p));
  EXPECT_EQ(three.forbidden_suffix(), t);
  OrbitModel sq(p, parse_word("t1^2", p));
  EXPECT_EQ(format_word(sq.forbidden_suffix(), p), "t1^2");
}

TEST(Orbit, TauSquareTwoPoints) {
  CongruenceSystem s = fixtures::swap();
  Presentation p = witness_presentation(s, 0);
  Word w = parse_word("t1^2", p);
  GroupPartition part(s, 0, w);
  OrbitPartition op = build_orbit_partition(part, OrbitModel(p, w));
  std::set<std::vector<Letter>> points;
  for (const auto& g : enumerate_ball(p, 3)) points.insert(op.representative(g).letters());
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(op.assign(Word::identity()), 1);
  EXPECT_EQ(op.assign(parse_word("t1", p)), 2);
  auto rep = verify_orbit_partition(op, 3);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.points, 2u);
}

TEST(Orbit, FreeOrbitUsesGroupPartition) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  GroupPartition part(t.system, t.m_bar, parse_word("s2^2", p));
  OrbitPartition op = build_orbit_partition(part, std::nullopt);
  for (const auto& g : enumerate_ball(p, 4)) ASSERT_EQ(op.assign(g), part.assign(g));
  EXPECT_TRUE(verify_orbit_partition(op, 4).passed);
  EXPECT_THROW(build_orbit_partition(part, OrbitModel(p, parse_word("s1^2", p))), std::invalid_argument);
}

TEST(Orbit, HausdorffFixedWordVerifies) {
  auto t = hausdorff_transformed();
  Presentation p = witness_presentation(t.system, t.m_bar);
  for (const char* text : {"s1^2", "s1 s2", "t1^2", "t1 s1 t1 s2", "t1^2 s2", "t1^3 s1 t1 s2"}) {
    Word w = parse_word(text, p);
    GroupPartition part(t.system, t.m_bar, w);
    OrbitPartition op = build_orbit_partition(part, OrbitModel(p, w));
    auto rep = verify_orbit_partition(op, 6);
    EXPECT_TRUE(rep.passed) << text << " " << describe(*rep.violation, p);
    EXPECT_GT(rep.exceptional, 0u) << text;
  }
}

// The algebraic orbit model against actual points: x0 on the axis of sigma_1
// is fixed by w = sigma_1, and two words give the same point exactly when
// they have the same canonical form.
TEST(Orbit, MatchesSpherePoints) {
  Presentation p(2, 1);
  auto real = standard_generators(p);
  ExactPoint x0(0, 0, 1);
  Word w = parse_word("s1", p);
  ASSERT_EQ(evaluate(real, w) * x0, x0);
  OrbitModel om(p, w);
  std::map<std::vector<Letter>, ExactPoint> by_canon;
  std::unordered_map<ExactPoint, std::vector<Letter>, ExactPointHash> by_point;
  for (const auto& g : enumerate_ball(p, 4)) {
    ExactPoint y = evaluate(real, g) * x0;
    auto c = om.canonical_form(g).letters();
    auto [it, fresh] = by_canon.emplace(c, y);
    ASSERT_EQ(it->second, y) << format_word(g, p);
    auto [jt, fresh_pt] = by_point.emplace(y, c);
    ASSERT_EQ(jt->second, c) << format_word(g, p);
  }
  EXPECT_EQ(by_canon.size(), by_point.size());
}
