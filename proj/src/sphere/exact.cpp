#include <functional>

#include "conglab/sphere.hpp"

namespace conglab {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string ExactPoint::to_string() const {
  return "(" + c[0].get_str() + ", " + c[1].get_str() + ", " + c[2].get_str() + ")";
}

std::size_t ExactPoint::hash() const {
  std::size_t h = 0;
  for (const auto& q : c) {
    std::size_t a = std::hash<long>()(mpz_get_si(q.get_num_mpz_t()));
    std::size_t b = std::hash<long>()(mpz_get_si(q.get_den_mpz_t()));
    h = (h * 1000003u) ^ (a * 31u + b);
  }
  return h;
}

Rational dot(const ExactPoint& a, const ExactPoint& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

ExactPoint cross(const ExactPoint& a, const ExactPoint& b) {
  return {a.c[1] * b.c[2] - a.c[2] * b.c[1], a.c[2] * b.c[0] - a.c[0] * b.c[2], a.c[0] * b.c[1] - a.c[1] * b.c[0]};
}

Rational chord2(const ExactPoint& a, const ExactPoint& b) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i) {
    Rational d = a.c[i] - b.c[i];
    s += d * d;
  }
  return s;
}

ExactPoint from_stereographic(const Rational& u, const Rational& v) {
  Rational s = u * u + v * v;
  Rational d = s + 1;
  return {Rational(2 * u / d), Rational(2 * v / d), Rational((s - 1) / d)};
}

ExactMatrix ExactMatrix::identity() {
  ExactMatrix m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::zeta() { return -identity(); }

ExactMatrix ExactMatrix::rotation_x(const Rational& c, const Rational& s) {
  ExactMatrix m;
  m.at(0, 0) = 1;
  m.at(1, 1) = c;
  m.at(1, 2) = -s;
  m.at(2, 1) = s;
  m.at(2, 2) = c;
  return m;
}

ExactMatrix ExactMatrix::rotation_y(const Rational& c, const Rational& s) {
  ExactMatrix m;
  m.at(1, 1) = 1;
  m.at(0, 0) = c;
  m.at(0, 2) = s;
  m.at(2, 0) = -s;
  m.at(2, 2) = c;
  return m;
}

ExactMatrix ExactMatrix::rotation_z(const Rational& c, const Rational& s) {
  ExactMatrix m;
  m.at(2, 2) = 1;
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

ExactMatrix ExactMatrix::quarter_turn(const ExactPoint& u) {
  ExactMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = u.c[i] * u.c[j];
  m.at(0, 1) -= u.c[2];
  m.at(1, 0) += u.c[2];
  m.at(0, 2) += u.c[1];
  m.at(2, 0) -= u.c[1];
  m.at(1, 2) -= u.c[0];
  m.at(2, 1) += u.c[0];
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  ExactMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r;
  for (std::size_t k = 0; k < 9; ++k) r.a_[k] = -a_[k];
  return r;
}

ExactPoint ExactMatrix::operator*(const ExactPoint& x) const {
  ExactPoint y;
  for (int i = 0; i < 3; ++i) y.c[i] = at(i, 0) * x.c[0] + at(i, 1) * x.c[1] + at(i, 2) * x.c[2];
  return y;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  for (std::size_t k = 0; k < 9; ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  return r;
}

Rational ExactMatrix::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Rational ExactMatrix::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

bool ExactMatrix::is_orthogonal() const { return (transpose() * *this).is_identity(); }

std::vector<std::string> ExactMatrix::entries() const {
  std::vector<std::string> out;
  for (const auto& q : a_) out.push_back(q.get_str());
  return out;
}

ExactPoint apply(const ExactMatrix& m, const ExactPoint& x) { return m * x; }

}  // namespace conglab
