#include "conglab/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "conglab/errors.hpp"

namespace conglab {

CongruenceClosure::CongruenceClosure(const CongruenceSystem& sys, std::optional<std::size_t> skip)
    : sys_(sys), skip_(skip) {
  auto intern = [&](const PieceMask& m) {
    auto [it, fresh] = index_.try_emplace(m, static_cast<int>(nodes_.size()));
    if (fresh) {
      nodes_.push_back(m);
      parent_.push_back(it->second);
      out_.emplace_back();
    }
    return it->second;
  };
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (skip && *skip == i) continue;
    for (std::size_t form = 0; form < 4; ++form) {
      CongruenceUse u = CongruenceUse::from_id(4 * i + form);
      int a = intern(use_source(sys, u));
      int b = intern(use_target(sys, u));
      out_[static_cast<std::size_t>(a)].emplace_back(u.id(), b);
      int ra = find(a), rb = find(b);
      if (ra != rb) parent_[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  }
}

int CongruenceClosure::find(int x) const {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

int CongruenceClosure::node(const PieceMask& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int CongruenceClosure::class_of(const PieceMask& m) const {
  int n = node(m);
  return n < 0 ? -1 : find(n);
}

bool CongruenceClosure::congruent(const PieceMask& a, const PieceMask& b) const {
  if (a == b) return true;
  int x = node(a), y = node(b);
  return x >= 0 && y >= 0 && find(x) == find(y);
}

std::optional<Deduction> CongruenceClosure::derive(const PieceMask& a, const PieceMask& b) const {
  Deduction d;
  d.relation = Relation::Congruent;
  d.from = a;
  d.to = b;
  if (a == b) return d;
  if (!congruent(a, b)) return std::nullopt;
  int src = node(a), dst = node(b);
  std::vector<std::pair<int, std::size_t>> prev(nodes_.size(), {-1, 0});
  std::vector<char> seen(nodes_.size(), 0);
  std::deque<int> queue{src};
  seen[static_cast<std::size_t>(src)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(dst)]) {
    int x = queue.front();
    queue.pop_front();
    for (auto [use, y] : out_[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      prev[static_cast<std::size_t>(y)] = {x, use};
      queue.push_back(y);
    }
  }
  for (int y = dst; y != src; y = prev[static_cast<std::size_t>(y)].first)
    d.steps.push_back(congruence_step(sys_, CongruenceUse::from_id(prev[static_cast<std::size_t>(y)].second)));
  std::reverse(d.steps.begin(), d.steps.end());
  return d;
}

MaskClasses CongruenceClosure::classes(std::size_t budget) const {
  MaskClasses out;
  const int r = sys_.pieces();
  std::map<int, std::vector<PieceMask>> by_root;
  for (std::size_t i = 0; i < nodes_.size(); ++i) by_root[find(static_cast<int>(i))].push_back(nodes_[i]);
  std::vector<std::vector<PieceMask>> groups;
  for (auto& [root, members] : by_root) groups.push_back(std::move(members));
  if (r <= 30 && ((std::size_t{1} << r) - 2) <= budget) {
    out.complete = true;
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << r); ++bits) {
      PieceMask m = PieceMask::from_bits(r, bits);
      if (node(m) < 0) groups.push_back({m});
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  out.classes = std::move(groups);
  return out;
}

bool equivalent_systems(const CongruenceSystem& a, const CongruenceSystem& b) {
  if (a.pieces() != b.pieces()) return false;
  CongruenceClosure ca(a), cb(b);
  for (const auto& c : b.congruences())
    if (!ca.congruent(c.left, c.right)) return false;
  for (const auto& c : a.congruences())
    if (!cb.congruent(c.left, c.right)) return false;
  return true;
}

}  // namespace conglab
