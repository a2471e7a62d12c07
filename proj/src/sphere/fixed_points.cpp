#include <unordered_map>

#include "conglab/sphere.hpp"

namespace conglab {

namespace {

// A nonzero vector orthogonal to the rows of a rank-2 matrix.
std::optional<ExactPoint> kernel_direction(const ExactMatrix& m) {
  ExactPoint rows[3];
  for (int i = 0; i < 3; ++i) rows[i] = {m.at(i, 0), m.at(i, 1), m.at(i, 2)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      ExactPoint v = cross(rows[i], rows[j]);
      if (v.norm2() != 0) return v;
    }
  return std::nullopt;
}

ExactMatrix minus_identity(const ExactMatrix& m) {
  ExactMatrix r = m;
  for (int i = 0; i < 3; ++i) r.at(i, i) -= 1;
  return r;
}

}  // namespace

FixedPointStatus fixed_point_status(const ExactMatrix& m) {
  FixedPointStatus st;
  if (m.is_identity()) {
    st.kind = FixedSet::All;
    return st;
  }
  if (m.det() > 0) {
    st.kind = FixedSet::Axis;
    st.direction = kernel_direction(minus_identity(m));
    return st;
  }
  // det -1: -M is a rotation; M fixes a point iff -M turns by pi, i.e.
  // trace(-M) = -1, and then M fixes the great circle orthogonal to its axis
  if (-m.trace() != -1) return st;
  st.kind = FixedSet::Circle;
  st.direction = kernel_direction(minus_identity(-m));
  return st;
}

OrbitReport orbit_points(const GroupRealization& real, const std::vector<Word>& words, const ExactPoint& x0) {
  OrbitReport rep;
  rep.points.reserve(words.size());
  std::unordered_map<ExactPoint, std::size_t, ExactPointHash> first;
  for (std::size_t k = 0; k < words.size(); ++k) {
    rep.points.push_back(evaluate(real, words[k]) * x0);
    auto [it, fresh] = first.emplace(rep.points.back(), k);
    if (!fresh) rep.coincidences.emplace_back(it->second, k);
  }
  std::vector<const ExactPoint*> distinct;
  for (const auto& [pt, idx] : first) distinct.push_back(&rep.points[idx]);
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      Rational d = chord2(*distinct[i], *distinct[j]);
      if (!rep.min_chord2 || d < *rep.min_chord2) rep.min_chord2 = d;
    }
  return rep;
}

}  // namespace conglab
