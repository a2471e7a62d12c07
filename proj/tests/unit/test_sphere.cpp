#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "conglab/sphere.hpp"

using namespace conglab;

namespace {

Eigen::Matrix3d numeric(const ExactMatrix& m) {
  Eigen::Matrix3d d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d(i, j) = m.at(i, j).get_d();
  return d;
}

bool numeric_has_unit_eigenvalue(const ExactMatrix& m) {
  Eigen::EigenSolver<Eigen::Matrix3d> es(numeric(m));
  for (int k = 0; k < 3; ++k)
    if (std::abs(es.eigenvalues()[k] - std::complex<double>(1.0, 0.0)) < 1e-9) return true;
  return false;
}

// the same generators without the zeta factor
GroupRealization underlying(const GroupRealization& real) {
  std::vector<ExactMatrix> mats = real.generators;
  for (std::size_t g = 0; g < mats.size(); ++g)
    if (real.zeta_composed[g]) mats[g] = -mats[g];
  return custom_realization(real.presentation, mats);
}

}  // namespace

TEST(Exact, RotationBasics) {
  auto rz = ExactMatrix::rotation_z(frac(3, 5), frac(4, 5));
  EXPECT_TRUE((rz.transpose() * rz).is_identity());
  EXPECT_EQ(rz.det(), 1);
  auto q = ExactMatrix::rotation_z(0, 1);
  auto q2 = q * q;
  EXPECT_FALSE(q2.is_identity());
  EXPECT_TRUE((q2 * q2).is_identity());
  EXPECT_EQ(q, ExactMatrix::quarter_turn(ExactPoint(0, 0, 1)));
  auto z = ExactMatrix::zeta();
  EXPECT_TRUE((z * z).is_identity());
  EXPECT_EQ(z * ExactPoint(1, 0, 0), ExactPoint(-1, 0, 0));
}

TEST(Exact, StereographicPointsOnSphere) {
  for (int a = -3; a <= 3; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_TRUE(from_stereographic(frac(a, b), frac(b, 7)).on_sphere());
}

TEST(Realization, StandardGenerators) {
  Presentation p(3, 2);
  auto real = standard_generators(p);
  ASSERT_EQ(real.generators.size(), 5u);
  for (std::size_t g = 0; g < 5; ++g) {
    const auto& m = real.generators[g];
    EXPECT_TRUE(m.is_orthogonal());
    if (p.is_tau(g)) {
      EXPECT_TRUE(real.zeta_composed[g]);
      EXPECT_EQ(m.det(), -1);
      EXPECT_FALSE((m * m).is_identity());
      EXPECT_TRUE((m * m * m * m).is_identity());
    } else {
      EXPECT_EQ(m.det(), 1);
      EXPECT_EQ(m.trace(), frac(11, 5));  // 1 + 2 * 3/5
    }
  }
  EXPECT_EQ(real.generators[0], ExactMatrix::rotation_z(frac(3, 5), frac(4, 5)));
  EXPECT_THROW(standard_generators(Presentation(5, 4)), std::invalid_argument);
}

TEST(Realization, SigmaPowersNeverIdentity) {
  auto real = standard_generators(Presentation(3, 0));
  for (std::size_t g = 0; g < 3; ++g) {
    ExactMatrix m = ExactMatrix::identity();
    for (int n = 1; n <= 24; ++n) {
      m = m * real.generators[g];
      ASSERT_FALSE(m.is_identity()) << g << "^" << n;
    }
  }
}

TEST(Realization, EvaluateIsHomomorphism) {
  Presentation p(1, 1);
  auto real = standard_generators(p);
  EXPECT_TRUE(evaluate(real, Word::identity()).is_identity());
  auto t = Word::generator(p, 1);
  EXPECT_EQ(evaluate(real, t) * evaluate(real, t), evaluate(real, power(t, 2, p)));
  auto ball = enumerate_ball(p, 4);
  std::vector<ExactMatrix> ev;
  for (const auto& w : ball) ev.push_back(evaluate(real, w));
  for (std::size_t i = 0; i < ball.size(); i += 3)
    for (std::size_t j = 0; j < ball.size(); j += 5)
      ASSERT_EQ(evaluate(real, multiply(ball[i], ball[j], p)), ev[i] * ev[j]);
  for (const auto& m : ev) {
    ASSERT_TRUE(m.is_orthogonal());
    ASSERT_TRUE(m.det() == 1 || m.det() == -1);
  }
}

TEST(Realization, ZetaSignFollowsParity) {
  Presentation p(1, 2);
  auto real = standard_generators(p);
  auto plain = underlying(real);
  for (const auto& w : enumerate_ball(p, 4)) {
    ExactMatrix a = evaluate(real, w), b = evaluate(plain, w);
    ASSERT_EQ(a, tau_parity(w, p) == Parity::Odd ? -b : b) << format_word(w, p);
    ASSERT_EQ(a.det() == 1, tau_parity(w, p) == Parity::Even);
  }
}

TEST(Freeness, CertifiesCommittedGenerators) {
  for (const Presentation& p : {Presentation(2, 0), Presentation(2, 1), Presentation(0, 1), Presentation(1, 2)}) {
    auto real = standard_generators(p);
    auto cert = certify(real, 8);
    EXPECT_TRUE(cert.certified);
    EXPECT_EQ(cert.words, ball_size(p, 8) - 1);
    EXPECT_EQ(real.certified_depth, 8u);
  }
}

TEST(Freeness, ClassicOrthogonalPair) {
  Presentation p(2, 0);
  auto real = custom_realization(p, {ExactMatrix::rotation_z(frac(3, 5), frac(4, 5)),
                                     ExactMatrix::rotation_x(frac(3, 5), frac(4, 5))});
  EXPECT_TRUE(certify_ball_freeness(real, 8).certified);
}

TEST(Freeness, SerialAndParallelAgree) {
  Presentation p(2, 1);
  auto real = standard_generators(p);
  auto a = certify_ball_freeness(real, 6, Kernel::Serial);
  auto b = certify_ball_freeness(real, 6, Kernel::Parallel);
  EXPECT_EQ(a.certified, b.certified);
  EXPECT_EQ(a.words, b.words);
}

TEST(Freeness, SabotageFindsRelation) {
  Presentation p(2, 0);
  auto r = standard_generators(p);
  auto bad = custom_realization(p, {r.generators[0], r.generators[0]});
  for (Kernel k : {Kernel::Serial, Kernel::Parallel}) {
    auto cert = certify_ball_freeness(bad, 8, k);
    ASSERT_FALSE(cert.certified);
    ASSERT_TRUE(cert.counterexample);
    EXPECT_EQ(format_word(*cert.counterexample, p), "s1^-1 s2");
    EXPECT_TRUE(evaluate(bad, *cert.counterexample).is_identity());
  }
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_point_status(ExactMatrix::identity()).kind, FixedSet::All);
  EXPECT_EQ(fixed_point_status(ExactMatrix::zeta()).kind, FixedSet::None);
  auto rz = fixed_point_status(ExactMatrix::rotation_z(frac(3, 5), frac(4, 5)));
  ASSERT_EQ(rz.kind, FixedSet::Axis);
  EXPECT_EQ(cross(*rz.direction, ExactPoint(0, 0, 1)).norm2(), 0);
  // a reflection fixes a great circle
  auto refl = -ExactMatrix::rotation_z(-1, 0);
  auto st = fixed_point_status(refl);
  EXPECT_EQ(st.kind, FixedSet::Circle);
}

TEST(FixedPoints, OddParityWordsHaveNone) {
  Presentation p(1, 2);
  auto real = standard_generators(p);
  std::size_t odd = 0, even = 0;
  for (const auto& w : enumerate_ball(p, 6)) {
    auto m = evaluate(real, w);
    if (tau_parity(w, p) == Parity::Odd) {
      if (odd++ >= 100) continue;
      ASSERT_EQ(m.det(), -1);
      ASSERT_FALSE(fixed_point_status(m).has_fixed_point()) << format_word(w, p);
    } else if (even++ < 100) {
      ASSERT_EQ(m.det(), 1);
    }
  }
  EXPECT_GE(odd, 100u);
}

TEST(FixedPoints, AgreesWithNumericEigenSolver) {
  Presentation p(2, 2);
  auto real = standard_generators(p);
  auto ball = enumerate_ball(p, 5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(1, ball.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const auto& w = ball[pick(rng)];
    auto m = evaluate(real, w);
    auto st = fixed_point_status(m);
    ASSERT_EQ(st.has_fixed_point(), numeric_has_unit_eigenvalue(m)) << format_word(w, p);
    if (st.direction) {
      ExactPoint v = m * *st.direction;
      if (st.kind == FixedSet::Axis) { ASSERT_EQ(v, *st.direction); }
    }
  }
  // squares of tau are half turns; with zeta they are still rotations
  auto t2 = evaluate(real, parse_word("t1^2", p));
  EXPECT_EQ(fixed_point_status(t2).kind, FixedSet::Axis);
}

TEST(Orbit, Points) {
  Presentation p(2, 0);
  auto real = standard_generators(p);
  auto single = orbit_points(real, {Word::identity()}, ExactPoint(1, 0, 0));
  ASSERT_EQ(single.points.size(), 1u);
  EXPECT_FALSE(single.min_chord2);

  auto ball = enumerate_ball(p, 4);
  auto rep = orbit_points(real, ball, ExactPoint(1, 0, 0));
  EXPECT_TRUE(rep.coincidences.empty());
  ASSERT_TRUE(rep.min_chord2);
  EXPECT_GT(*rep.min_chord2, 0);
  for (const auto& pt : rep.points) ASSERT_TRUE(pt.on_sphere());

  // the axis of sigma_1 is the z axis
  auto axis = orbit_points(real, {Word::identity(), Word::generator(p, 0)}, ExactPoint(0, 0, 1));
  ASSERT_EQ(axis.coincidences.size(), 1u);
  EXPECT_EQ(axis.coincidences[0], std::make_pair(std::size_t{0}, std::size_t{1}));
}
