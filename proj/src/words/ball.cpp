#include <algorithm>

#include "conglab/words.hpp"

namespace conglab {

std::vector<Letter> alphabet(const Presentation& p) {
  std::vector<Letter> out;
  for (std::size_t g = 0; g < p.generators(); ++g) {
    if (!p.is_tau(g)) out.push_back(letter_code(g, false));
    out.push_back(letter_code(g, true));
  }
  return out;
}

bool letter_allowed(const Presentation& p, std::span<const Letter> prefix, Letter next) {
  if (prefix.empty()) return true;
  Letter last = prefix.back();
  if (letter_gen(last) != letter_gen(next)) return true;
  if (!p.is_tau(letter_gen(next))) return last == next;
  std::size_t run = 0;
  for (auto it = prefix.rbegin(); it != prefix.rend() && *it == next; ++it) ++run;
  return run < 3;
}

void for_each_in_ball(const Presentation& p, std::size_t L,
                      const std::function<void(std::span<const Letter>)>& visit) {
  const auto letters = alphabet(p);
  std::vector<Letter> buf;
  buf.reserve(L);
  auto rec = [&](auto&& self) -> void {
    visit(std::span<const Letter>(buf));
    if (buf.size() == L) return;
    for (Letter l : letters) {
      if (!letter_allowed(p, buf, l)) continue;
      buf.push_back(l);
      self(self);
      buf.pop_back();
    }
  };
  rec(rec);
}

std::vector<Word> enumerate_ball(const Presentation& p, std::size_t L) {
  // depth-first with letters in code order gives lexicographic order within
  // each length; a stable sort by length then yields shortlex
  std::vector<std::pair<std::size_t, Word>> all;
  for_each_in_ball(p, L, [&](std::span<const Letter> w) { all.emplace_back(w.size(), from_letters(w, p)); });
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> out;
  out.reserve(all.size());
  for (auto& [len, w] : all) out.push_back(std::move(w));
  return out;
}

std::vector<std::uint64_t> sphere_sizes(const Presentation& p, std::size_t L) {
  const std::uint64_t a = 2 * p.free_count();
  const std::uint64_t q = p.tau_count();
  // s: words ending in one fixed sigma letter; t[k]: ending in a fixed tau
  // generator with a run of exactly k+1 copies
  std::uint64_t s = 0, t[3] = {0, 0, 0}, total = 1;
  std::vector<std::uint64_t> out{1};
  for (std::size_t n = 1; n <= L; ++n) {
    std::uint64_t tau_end = t[0] + t[1] + t[2];
    std::uint64_t ns = total - s;
    std::uint64_t nt0 = total - tau_end;
    t[2] = t[1];
    t[1] = t[0];
    t[0] = nt0;
    s = ns;
    total = a * s + q * (t[0] + t[1] + t[2]);
    out.push_back(total);
  }
  return out;
}

std::uint64_t ball_size(const Presentation& p, std::size_t L) {
  std::uint64_t n = 0;
  for (auto v : sphere_sizes(p, L)) n += v;
  return n;
}

}  // namespace conglab
