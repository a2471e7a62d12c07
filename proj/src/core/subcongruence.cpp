#include "conglab/subcongruence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <tuple>

#include "conglab/errors.hpp"

namespace conglab {

namespace {

void append_subset(Deduction& d, const PieceMask& from, const PieceMask& to) {
  if (from != to) d.steps.push_back(subset_step(from, to));
}

}  // namespace

SubcongruenceIndex::SubcongruenceIndex(const CongruenceSystem& sys) : sys_(sys) {
  const std::size_t n = 4 * sys.size();
  for (std::size_t u = 0; u < n; ++u) {
    src_.push_back(use_source(sys, CongruenceUse::from_id(u)));
    dst_.push_back(use_target(sys, CongruenceUse::from_id(u)));
  }
  next_.resize(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (dst_[u].subset_of(src_[v])) next_[u].push_back(v);
  dist_.assign(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    dist_[s][s] = 0;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : next_[u])
        if (dist_[s][v] < 0) {
          dist_[s][v] = dist_[s][u] + 1;
          q.push_back(v);
        }
    }
  }
}

std::vector<std::size_t> SubcongruenceIndex::path(std::size_t from_use, std::size_t to_use) const {
  // walk forward greedily along strictly decreasing distance to the target
  std::vector<std::size_t> p{from_use};
  std::size_t at = from_use;
  while (at != to_use) {
    for (std::size_t v : next_[at]) {
      if (dist_[v][to_use] >= 0 && dist_[v][to_use] == dist_[at][to_use] - 1) {
        at = v;
        break;
      }
    }
    p.push_back(at);
  }
  return p;
}

Deduction SubcongruenceIndex::chain_between(std::size_t from_use, std::size_t to_use) const {
  Deduction d;
  d.relation = Relation::Subcongruent;
  auto uses = path(from_use, to_use);
  d.from = src_[uses.front()];
  d.to = dst_[uses.back()];
  for (std::size_t k = 0; k < uses.size(); ++k) {
    if (k > 0) append_subset(d, dst_[uses[k - 1]], src_[uses[k]]);
    d.steps.push_back(congruence_step(sys_, CongruenceUse::from_id(uses[k])));
  }
  return d;
}

bool SubcongruenceIndex::holds(const PieceMask& l, const PieceMask& r) const { return derive(l, r).has_value(); }

std::optional<Deduction> SubcongruenceIndex::derive(const PieceMask& l, const PieceMask& r) const {
  if (l.subset_of(r)) {
    Deduction d{Relation::Subcongruent, l, r, {}};
    append_subset(d, l, r);
    return d;
  }
  const std::size_t n = src_.size();
  std::optional<std::tuple<int, std::size_t, std::size_t>> best;
  for (std::size_t u = 0; u < n; ++u) {
    if (!l.subset_of(src_[u])) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist_[u][v] < 0 || !dst_[v].subset_of(r)) continue;
      auto cand = std::make_tuple(dist_[u][v], u, v);
      if (!best || cand < *best) best = cand;
    }
  }
  if (!best) return std::nullopt;
  auto [len, u, v] = *best;
  Deduction inner = chain_between(u, v);
  Deduction d{Relation::Subcongruent, l, r, {}};
  append_subset(d, l, inner.from);
  d.steps.insert(d.steps.end(), inner.steps.begin(), inner.steps.end());
  append_subset(d, inner.to, r);
  return d;
}

std::vector<SubcongruenceIndex::Inconsistency> SubcongruenceIndex::maximal_inconsistencies() const {
  const std::size_t n = src_.size();
  std::vector<std::tuple<int, PieceMask, PieceMask, std::size_t, std::size_t>> found;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (dist_[u][v] >= 0 && dst_[v].proper_subset_of(src_[u])) found.emplace_back(dist_[u][v], src_[u], dst_[v], u, v);
  std::sort(found.begin(), found.end());
  std::vector<Inconsistency> out;
  std::set<std::pair<PieceMask, PieceMask>> seen;
  for (auto& [len, x, y, u, v] : found) {
    if (!seen.insert({x, y}).second) continue;
    out.push_back({x, y, chain_between(u, v)});
  }
  return out;
}

std::optional<SubcongruenceIndex::Inconsistency> SubcongruenceIndex::first_inconsistency() const {
  auto all = maximal_inconsistencies();
  if (all.empty()) return std::nullopt;
  return all.front();
}

PieceMask SubcongruenceIndex::deletion_set() const {
  PieceMask del(sys_.pieces());
  for (const auto& inc : maximal_inconsistencies()) del |= inc.left - inc.right;
  return del;
}

std::vector<std::pair<PieceMask, PieceMask>> SubcongruenceIndex::order_decreasing_pairs(std::size_t budget) const {
  const int r = sys_.pieces();
  if (r > 24) throw BudgetExceeded("order-decreasing pair enumeration needs r <= 24", 0);
  std::set<std::pair<std::uint64_t, std::uint64_t>> reach;
  const std::size_t n = src_.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (dist_[u][v] >= 0) reach.emplace(src_[u].low_word(), dst_[v].low_word());
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  std::size_t work = 0;
  const std::uint64_t all = (std::uint64_t{1} << r) - 1;
  for (auto [x, y] : reach) {
    // L ranges over subsets of X, R over supersets of Y
    const std::uint64_t free_bits = all & ~y;
    for (std::uint64_t l = x;; l = (l - 1) & x) {
      const int cl = std::popcount(l);
      for (std::uint64_t extra = free_bits;; extra = (extra - 1) & free_bits) {
        if (++work > budget) throw BudgetExceeded("order-decreasing pair enumeration", work);
        std::uint64_t rr = y | extra;
        if (std::popcount(rr) < cl) out.emplace(l, rr);
        if (extra == 0) break;
      }
      if (l == 0) break;
    }
  }
  std::vector<std::pair<PieceMask, PieceMask>> pairs;
  for (auto [l, rr] : out) pairs.emplace_back(PieceMask::from_bits(r, l), PieceMask::from_bits(r, rr));
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace conglab
