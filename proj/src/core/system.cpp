#include "conglab/system.hpp"

#include <stdexcept>

namespace conglab {

namespace {

void check_side(const PieceMask& side, int r) {
  if (side.universe() != r) throw std::invalid_argument("side has wrong universe size");
  if (side.empty()) throw std::invalid_argument("improper side: empty set");
  if (side.is_full()) throw std::invalid_argument("improper side: full set");
}

}  // namespace

CongruenceSystem::CongruenceSystem(int r, std::vector<Congruence> congruences) : r_(r) {
  if (r < 1) throw std::invalid_argument("piece count must be at least 1");
  for (auto& c : congruences) add(std::move(c.left), std::move(c.right));
}

void CongruenceSystem::add(PieceMask left, PieceMask right) {
  check_side(left, r_);
  check_side(right, r_);
  congruences_.push_back({std::move(left), std::move(right)});
}

void CongruenceSystem::add(std::initializer_list<int> left, std::initializer_list<int> right) {
  add(PieceMask::of(r_, left), PieceMask::of(r_, right));
}

CongruenceSystem CongruenceSystem::without(std::size_t index) const {
  CongruenceSystem out(r_);
  for (std::size_t i = 0; i < congruences_.size(); ++i)
    if (i != index) out.congruences_.push_back(congruences_[i]);
  return out;
}

CongruenceSystem CongruenceSystem::prefix(std::size_t count) const {
  CongruenceSystem out(r_);
  for (std::size_t i = 0; i < count && i < congruences_.size(); ++i) out.congruences_.push_back(congruences_[i]);
  return out;
}

namespace fixtures {

CongruenceSystem hausdorff() {
  CongruenceSystem s(3);
  s.add({1}, {2});
  s.add({2}, {3});
  s.add({1}, {2, 3});
  return s;
}

CongruenceSystem robinson() {
  CongruenceSystem s(4);
  s.add({2}, {2, 3, 4});
  s.add({4}, {1, 2, 4});
  return s;
}

CongruenceSystem five_set() {
  CongruenceSystem s(5);
  s.add({1}, {2});
  s.add({2}, {3});
  s.add({3}, {4});
  s.add({4}, {5});
  s.add({1, 2}, {1, 3, 4});
  return s;
}

CongruenceSystem swap() {
  CongruenceSystem s(2);
  s.add({1}, {2});
  return s;
}

CongruenceSystem padded_hausdorff() {
  CongruenceSystem s(5);
  s.add({1}, {2});
  s.add({2}, {3});
  s.add({1, 4}, {2, 3, 5});
  return s;
}

CongruenceSystem double_tau() {
  CongruenceSystem s(4);
  s.add({1}, {2});
  s.add({1, 3}, {2, 4});
  s.add({2, 3}, {1, 4});
  return s;
}

CongruenceSystem duplicate() {
  CongruenceSystem s(2);
  s.add({1}, {2});
  s.add({1}, {2});
  return s;
}

CongruenceSystem double_congruence() {
  CongruenceSystem s(2);
  s.add({1}, {2});
  s.add({2}, {1});
  return s;
}

}  // namespace fixtures

}  // namespace conglab
