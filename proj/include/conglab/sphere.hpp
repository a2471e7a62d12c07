#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conglab/kernel.hpp"
#include "conglab/words.hpp"

namespace conglab {

using Rational = mpq_class;

// num/den in canonical form (mpq_class(num, den) alone does not reduce)
Rational frac(long num, long den);

struct ExactPoint {
  std::array<Rational, 3> c;

  ExactPoint() = default;
  ExactPoint(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}

  Rational norm2() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }
  bool on_sphere() const { return norm2() == 1; }
  ExactPoint operator-() const { return {-c[0], -c[1], -c[2]}; }
  bool operator==(const ExactPoint& o) const { return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2]; }
  std::string to_string() const;  // "(3/5, 4/5, 0)"
  std::size_t hash() const;
};

Rational dot(const ExactPoint& a, const ExactPoint& b);
ExactPoint cross(const ExactPoint& a, const ExactPoint& b);
// squared chordal distance
Rational chord2(const ExactPoint& a, const ExactPoint& b);

struct ExactPointHash {
  std::size_t operator()(const ExactPoint& p) const { return p.hash(); }
};

// Inverse stereographic projection from the north pole: every rational (u, v)
// lands on a rational point of the unit sphere.
ExactPoint from_stereographic(const Rational& u, const Rational& v);

class ExactMatrix {
 public:
  ExactMatrix() = default;  // zero
  static ExactMatrix identity();
  static ExactMatrix zeta();  // -I
  // rotations with the given cosine and sine about a coordinate axis
  static ExactMatrix rotation_x(const Rational& cos, const Rational& sin);
  static ExactMatrix rotation_y(const Rational& cos, const Rational& sin);
  static ExactMatrix rotation_z(const Rational& cos, const Rational& sin);
  // quarter turn about a rational unit axis: u u^T + [u]_x
  static ExactMatrix quarter_turn(const ExactPoint& axis);

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(3 * i + j)]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(3 * i + j)]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactPoint operator*(const ExactPoint& x) const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix transpose() const;
  Rational det() const;
  Rational trace() const;
  bool is_orthogonal() const;
  bool is_identity() const { return *this == identity(); }
  std::vector<std::string> entries() const;  // row-major fraction strings

 private:
  std::array<Rational, 9> a_;
};

ExactPoint apply(const ExactMatrix& m, const ExactPoint& x);

// Generator matrices for a presentation. The stored matrix of an order-4
// generator is already composed with zeta when zeta_composed is set.
struct GroupRealization {
  Presentation presentation;
  std::vector<ExactMatrix> generators;
  std::vector<ExactMatrix> inverses;
  std::vector<bool> zeta_composed;
  std::size_t certified_depth = 0;

  const ExactMatrix& letter(Letter l) const {
    return letter_positive(l) ? generators[letter_gen(l)] : inverses[letter_gen(l)];
  }
  ExactMatrix generator_power(std::size_t gen, std::int32_t exp) const;
};

inline constexpr std::size_t kMaxRealizedGenerators = 8;

// Committed generators: sigma_k = a^(k-1) b a^-(k-1) with b = R_z(3/5, 4/5)
// and a = R_x(3/5, 4/5); tau_k = zeta * (quarter turn about a fixed rational
// axis). Throws std::invalid_argument for more than eight generators.
GroupRealization standard_generators(const Presentation& p);
// Quarter-turn axes behind the tau generators, in order.
std::vector<ExactPoint> committed_tau_axes();

// Validates orthogonality and the generator orders.
GroupRealization custom_realization(const Presentation& p, std::vector<ExactMatrix> matrices,
                                    std::vector<bool> zeta_composed = {});

ExactMatrix evaluate(const GroupRealization& real, const Word& g);

struct FreenessCertificate {
  bool certified = false;
  std::size_t depth = 0;
  std::uint64_t words = 0;  // nonidentity words checked
  std::optional<Word> counterexample;  // shortlex least relation found
};

// Every nonidentity reduced word of length <= L evaluates to a matrix other
// than I. Matrices are first compared modulo 2^61 - 1; a match there is
// settled by exact rational evaluation.
FreenessCertificate certify_ball_freeness(const GroupRealization& real, std::size_t L,
                                          Kernel kernel = Kernel::Parallel);
// Certifies and records the depth in the realization.
FreenessCertificate certify(GroupRealization& real, std::size_t L);

enum class FixedSet { None, All, Axis, Circle };

struct FixedPointStatus {
  FixedSet kind = FixedSet::None;
  // Axis: rotation axis direction; Circle: normal of the fixed great circle.
  // Unnormalized rational vector.
  std::optional<ExactPoint> direction;
  bool has_fixed_point() const { return kind != FixedSet::None; }
};

FixedPointStatus fixed_point_status(const ExactMatrix& m);

struct OrbitReport {
  std::vector<ExactPoint> points;
  std::optional<Rational> min_chord2;  // absent with fewer than two distinct points
  std::vector<std::pair<std::size_t, std::size_t>> coincidences;  // index pairs with equal points
};

OrbitReport orbit_points(const GroupRealization& real, const std::vector<Word>& words, const ExactPoint& x0);

std::string to_string(const Rational& q);

}  // namespace conglab
