#include <cstdlib>
#include <deque>
#include <numeric>

#include "conglab/words.hpp"

namespace conglab {

namespace {

bool pure_tau_power(const Word& w, const Presentation& p) {
  return w.syllables().size() == 1 && p.is_tau(w.syllables().front().gen);
}

}  // namespace

TripleDecomposition decompose(const Word& g, const Presentation& p) {
  std::deque<Syllable> h2(g.syllables().begin(), g.syllables().end());
  std::vector<Syllable> h1;
  std::vector<Syllable> h3_rev;
  auto shrink_front = [&](std::int32_t by) {
    h2.front().exp -= by;
    if (h2.front().exp == 0) h2.pop_front();
  };
  auto shrink_back = [&](std::int32_t by) {
    h2.back().exp -= by;
    if (h2.back().exp == 0) h2.pop_back();
  };
  while (h2.size() >= 2) {
    Syllable first = h2.front(), last = h2.back();
    if (first.gen != last.gen) break;
    if (!p.is_tau(first.gen)) {
      // sigma_i ... sigma_i^-1 or sigma_i^-1 ... sigma_i
      if ((first.exp > 0) == (last.exp > 0)) break;
      std::int32_t s = first.exp > 0 ? 1 : -1;
      h1.push_back({first.gen, s});
      h3_rev.push_back({first.gen, -s});
      shrink_front(s);
      shrink_back(-s);
    } else {
      std::int32_t a = first.exp, b = last.exp;
      if (a + b < 4) break;
      std::int32_t j = a + b > 4 ? 2 : a;
      h1.push_back({first.gen, j});
      h3_rev.push_back({first.gen, 4 - j});
      shrink_front(j);
      shrink_back(4 - j);
    }
  }
  TripleDecomposition out;
  out.h1 = reduce(h1, p);
  out.h2 = reduce(std::vector<Syllable>(h2.begin(), h2.end()), p);
  out.h3 = reduce(std::vector<Syllable>(h3_rev.rbegin(), h3_rev.rend()), p);
  return out;
}

Word power(const Word& g, long n, const Presentation& p) {
  if (n == 0 || g.is_identity()) return Word::identity();
  auto [h1, h2, h3] = decompose(g, p);
  std::vector<Syllable> raw = h1.syllables();
  if (pure_tau_power(h2, p)) {
    const auto& s = h2.syllables().front();
    long k = ((static_cast<long>(s.exp) * n) % 4 + 4) % 4;
    if (k == 0) return Word::identity();
    raw.push_back({s.gen, static_cast<std::int32_t>(k)});
  } else {
    Word base = n > 0 ? h2 : inverse(h2, p);
    for (long i = 0; i < std::labs(n); ++i) raw.insert(raw.end(), base.syllables().begin(), base.syllables().end());
  }
  raw.insert(raw.end(), h3.syllables().begin(), h3.syllables().end());
  return reduce(raw, p);
}

unsigned element_order(const Word& g, const Presentation& p) {
  if (g.is_identity()) return 1;
  auto d = decompose(g, p);
  if (!pure_tau_power(d.h2, p)) return 0;
  return static_cast<unsigned>(4 / std::gcd(4, d.h2.syllables().front().exp));
}

}  // namespace conglab
