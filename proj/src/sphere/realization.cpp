#include <stdexcept>

#include "conglab/sphere.hpp"

namespace conglab {

std::vector<ExactPoint> committed_tau_axes() {
  auto unit = [](long x, long y, long z, long n) {
    return ExactPoint(frac(x, n), frac(y, n), frac(z, n));
  };
  return {unit(1, 2, 2, 3),  unit(2, 3, 6, 7),   unit(1, 4, 8, 9),    unit(2, 6, 9, 11),
          unit(4, 4, 7, 9),  unit(2, 10, 11, 15), unit(1, 12, 12, 17), unit(6, 6, 7, 11)};
}

ExactMatrix GroupRealization::generator_power(std::size_t gen, std::int32_t exp) const {
  ExactMatrix m = ExactMatrix::identity();
  const ExactMatrix& step = exp > 0 ? generators[gen] : inverses[gen];
  for (std::int32_t k = 0; k < std::abs(exp); ++k) m = m * step;
  return m;
}

GroupRealization custom_realization(const Presentation& p, std::vector<ExactMatrix> matrices,
                                    std::vector<bool> zeta_composed) {
  if (matrices.size() != p.generators()) throw std::invalid_argument("one matrix per generator required");
  if (zeta_composed.empty()) zeta_composed.assign(p.generators(), false);
  GroupRealization real;
  real.presentation = p;
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const auto& m = matrices[g];
    if (!m.is_orthogonal()) throw std::invalid_argument("generator " + std::to_string(g + 1) + " is not orthogonal");
    if (p.is_tau(g)) {
      ExactMatrix sq = m * m;
      if (sq.is_identity() || !(sq * sq).is_identity())
        throw std::invalid_argument("generator " + std::to_string(g + 1) + " does not have order 4");
    } else if (m.is_identity()) {
      throw std::invalid_argument("generator " + std::to_string(g + 1) + " is the identity");
    }
    real.inverses.push_back(m.transpose());
  }
  real.generators = std::move(matrices);
  real.zeta_composed = std::move(zeta_composed);
  return real;
}

GroupRealization standard_generators(const Presentation& p) {
  if (p.generators() > kMaxRealizedGenerators)
    throw std::invalid_argument("at most " + std::to_string(kMaxRealizedGenerators) + " generators can be realized");
  const Rational c = frac(3, 5), s = frac(4, 5);
  const ExactMatrix a = ExactMatrix::rotation_x(c, s), a_inv = a.transpose();
  const ExactMatrix b = ExactMatrix::rotation_z(c, s);
  std::vector<ExactMatrix> mats;
  ExactMatrix conj = ExactMatrix::identity(), conj_inv = ExactMatrix::identity();
  for (std::size_t k = 0; k < p.free_count(); ++k) {
    mats.push_back(conj * b * conj_inv);
    conj = conj * a;
    conj_inv = a_inv * conj_inv;
  }
  const auto axes = committed_tau_axes();
  std::vector<bool> zeta(p.free_count(), false);
  for (std::size_t k = 0; k < p.tau_count(); ++k) {
    mats.push_back(ExactMatrix::zeta() * ExactMatrix::quarter_turn(axes[k]));
    zeta.push_back(true);
  }
  return custom_realization(p, std::move(mats), std::move(zeta));
}

ExactMatrix evaluate(const GroupRealization& real, const Word& g) {
  ExactMatrix m = ExactMatrix::identity();
  for (const auto& syl : g.syllables()) m = m * real.generator_power(syl.gen, syl.exp);
  return m;
}

}  // namespace conglab
