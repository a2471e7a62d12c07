#include <array>
#include <cmath>

#include "conglab/sim.hpp"

namespace conglab {

namespace {

// Stern's diatomic sequence; fusc(k) / fusc(k + 1) runs through the positive
// rationals once each.
std::size_t fusc(std::size_t n) {
  std::size_t a = 1, b = 0;
  while (n > 0) {
    if (n & 1U) b += a;
    else a += b;
    n >>= 1;
  }
  return b;
}

Rational quarter_power(std::size_t level) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(2 * level);
  return Rational(mpz_class(1), den);
}

}  // namespace

Rational dense_rational(std::size_t n) {
  if (n == 0) return 0;
  std::size_t k = (n + 1) / 2;
  Rational q(mpz_class(static_cast<unsigned long>(fusc(k))), mpz_class(static_cast<unsigned long>(fusc(k + 1))));
  q.canonicalize();
  return n % 2 == 1 ? q : Rational(-q);
}

std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t n) {
  auto w = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  std::size_t y = n - w * (w + 1) / 2;
  return {w - y, y};
}

BaseCap BaseSchedule::entry(std::size_t n) const {
  BaseCap z;
  z.index = n;
  if (n < static_cast<std::size_t>(r_)) {
    z.whole = true;
    return z;
  }
  auto [i, j] = cantor_unpair(n - static_cast<std::size_t>(r_));
  auto [a, b] = cantor_unpair(i);
  z.center_index = i;
  z.radius_level = j;
  z.u = dense_rational(a);
  z.v = dense_rational(b);
  z.cap = Cap{from_stereographic(z.u, z.v), quarter_power(j)};
  return z;
}

ExactPoint whole_sphere_candidate(std::size_t n) {
  auto [a, b] = cantor_unpair(n);
  return from_stereographic(dense_rational(a), dense_rational(b));
}

ExactPoint cap_candidate(const BaseCap& z, std::size_t n) {
  static constexpr std::array<std::pair<int, int>, 8> kDirs{
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
  const std::size_t level = z.radius_level + 2 + n / kDirs.size();
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(level);
  Rational delta(mpz_class(1), den);
  auto [a, b] = kDirs[n % kDirs.size()];
  return from_stereographic(z.u + a * delta, z.v + b * delta);
}

}  // namespace conglab
