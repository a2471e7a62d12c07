#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conglab/sim.hpp"

namespace conglab {

namespace {

constexpr double kCell = 0.125;
constexpr int kCellsPerAxis = 17;
constexpr double kSlack = 1e-9;

int cell_coord(double x) { return std::clamp(static_cast<int>(std::floor((x + 1.0) / kCell)), 0, kCellsPerAxis - 1); }

double approx_chord2(const Approx& a, const Approx& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

bool cap_contains(const Cap& c, const ExactPoint& p) { return chord2(c.center, p) < c.radius_sq; }
bool cap_boundary(const Cap& c, const ExactPoint& p) { return chord2(c.center, p) == c.radius_sq; }
bool cap_closure_contains(const Cap& c, const ExactPoint& p) { return chord2(c.center, p) <= c.radius_sq; }

// With cos a = 1 - s/2 for each cap and d the cosine between the centers,
// disjointness is d <= cos(a + b) and nesting is d >= cos(a - b); both are
// squared out against the product of the sines.
CapRelation relate(const Cap& a, const Cap& b) {
  if (a.radius_sq > 2 || b.radius_sq > 2) throw std::invalid_argument("caps larger than a hemisphere");
  if (a.center == b.center && a.radius_sq == b.radius_sq) return CapRelation::Equal;
  Rational ca = 1 - a.radius_sq / 2, cb = 1 - b.radius_sq / 2;
  Rational d = dot(a.center, b.center);
  Rational p = (1 - ca * ca) * (1 - cb * cb);
  Rational x = ca * cb - d;
  if (sgn(x) >= 0 && x * x >= p) return CapRelation::Disjoint;
  Rational y = d - ca * cb;
  if (sgn(y) >= 0 && y * y >= p)
    return a.radius_sq <= b.radius_sq ? CapRelation::FirstInsideSecond : CapRelation::SecondInsideFirst;
  return CapRelation::Overlapping;
}

Approx approximate(const ExactPoint& p) { return {p.c[0].get_d(), p.c[1].get_d(), p.c[2].get_d()}; }

std::vector<std::int64_t> CapIndex::cells_of(const Approx& lo, const Approx& hi) const {
  std::vector<std::int64_t> out;
  int a0 = cell_coord(lo[0]), a1 = cell_coord(hi[0]);
  int b0 = cell_coord(lo[1]), b1 = cell_coord(hi[1]);
  int c0 = cell_coord(lo[2]), c1 = cell_coord(hi[2]);
  for (int a = a0; a <= a1; ++a)
    for (int b = b0; b <= b1; ++b)
      for (int c = c0; c <= c1; ++c) out.push_back((static_cast<std::int64_t>(a) * 32 + b) * 32 + c);
  return out;
}

std::size_t CapIndex::insert(const Cap& cap, const PieceMask& pieces) {
  auto& same = by_center_[cap.center];
  for (std::size_t id : same) {
    if (caps_[id].radius_sq == cap.radius_sq) {
      pieces_[id] |= pieces;
      return id;
    }
  }
  const std::size_t id = caps_.size();
  same.push_back(id);
  caps_.push_back(cap);
  pieces_.push_back(pieces);
  center_.push_back(approximate(cap.center));
  radius_.push_back(std::sqrt(cap.radius_sq.get_d()));
  const double reach = radius_.back() + kSlack;
  Approx lo, hi;
  for (int i = 0; i < 3; ++i) {
    lo[i] = center_.back()[i] - reach;
    hi[i] = center_.back()[i] + reach;
  }
  for (auto key : cells_of(lo, hi)) grid_[key].push_back(id);
  return id;
}

std::vector<std::size_t> CapIndex::near(const Approx& p, double radius) const {
  Approx lo, hi;
  for (int i = 0; i < 3; ++i) {
    lo[i] = p[i] - radius - kSlack;
    hi[i] = p[i] + radius + kSlack;
  }
  std::vector<std::size_t> out;
  for (auto key : cells_of(lo, hi)) {
    auto it = grid_.find(key);
    if (it == grid_.end()) continue;
    for (std::size_t id : it->second) {
      double reach = radius + radius_[id] + kSlack;
      if (approx_chord2(p, center_[id]) <= reach * reach) out.push_back(id);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PieceMask CapIndex::membership(const ExactPoint& p, const Approx& a, int r) const {
  PieceMask m(r);
  auto it = grid_.find(cells_of(a, a).front());
  if (it == grid_.end()) return m;
  for (std::size_t id : it->second) {
    if (pieces_[id].subset_of(m)) continue;
    if (approx_chord2(a, center_[id]) > radius_[id] * radius_[id] + kSlack) continue;
    if (cap_contains(caps_[id], p)) m |= pieces_[id];
  }
  return m;
}

bool CapIndex::on_boundary(const ExactPoint& p, const Approx& a) const {
  auto it = grid_.find(cells_of(a, a).front());
  if (it == grid_.end()) return false;
  for (std::size_t id : it->second) {
    if (std::abs(approx_chord2(a, center_[id]) - radius_[id] * radius_[id]) > kSlack) continue;
    if (cap_boundary(caps_[id], p)) return true;
  }
  return false;
}

bool CapIndex::closure_hits(const ExactPoint& p, const Approx& a, int k) const {
  auto it = grid_.find(cells_of(a, a).front());
  if (it == grid_.end()) return false;
  for (std::size_t id : it->second) {
    if (!pieces_[id].test(k)) continue;
    if (approx_chord2(a, center_[id]) > radius_[id] * radius_[id] + kSlack) continue;
    if (cap_closure_contains(caps_[id], p)) return true;
  }
  return false;
}

}  // namespace conglab
