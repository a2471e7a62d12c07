#include <omp.h>

#include <array>

#include "conglab/sphere.hpp"

namespace conglab {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 z = static_cast<u128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (m < 0) m += static_cast<unsigned long>(kPrime);
  return m.get_ui();
}

std::uint64_t to_mod(const Rational& q) {
  return mulmod(reduce_mpz(q.get_num()), powmod(reduce_mpz(q.get_den()), kPrime - 2));
}

using ModMatrix = std::array<std::uint64_t, 9>;

ModMatrix to_mod(const ExactMatrix& m) {
  ModMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(3 * i + j)] = to_mod(m.at(i, j));
  return r;
}

ModMatrix mul(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::uint64_t s = mulmod(a[3 * i], b[j]) + mulmod(a[3 * i + 1], b[3 + j]) + mulmod(a[3 * i + 2], b[6 + j]);
      r[3 * i + j] = s % kPrime;
    }
  return r;
}

bool is_identity(const ModMatrix& m) {
  for (std::size_t k = 0; k < 9; ++k)
    if (m[k] != (k % 4 == 0 ? 1u : 0u)) return false;
  return true;
}

struct Search {
  const GroupRealization& real;
  const std::vector<Letter>& letters;
  const std::vector<ModMatrix>& mod_letter;  // indexed by letter code
  std::size_t L;
  std::uint64_t words = 0;
  std::optional<Word> best;

  void consider(std::span<const Letter> w) {
    Word g = from_letters(w, real.presentation);
    if (!evaluate(real, g).is_identity()) return;
    if (!best || shortlex_less(g, *best)) best = g;
  }

  // Checks `prefix` and every reduced extension up to length L.
  void run(std::vector<Letter>& prefix, const ModMatrix& m) {
    ++words;
    if (is_identity(m)) consider(prefix);
    if (prefix.size() == L) return;
    for (Letter l : letters) {
      if (!letter_allowed(real.presentation, prefix, l)) continue;
      prefix.push_back(l);
      run(prefix, mul(m, mod_letter[l]));
      prefix.pop_back();
    }
  }
};

}  // namespace

FreenessCertificate certify_ball_freeness(const GroupRealization& real, std::size_t L, Kernel kernel) {
  const Presentation& p = real.presentation;
  const auto letters = alphabet(p);
  std::vector<ModMatrix> mod_letter(2 * p.generators());
  for (Letter l : letters) mod_letter[l] = to_mod(real.letter(l));

  // tasks: every reduced prefix of length min(L, 2); shorter words are
  // covered by the task that starts with them (its own prefix)
  std::vector<std::vector<Letter>> tasks;
  const std::size_t split = std::min<std::size_t>(L, 2);
  for_each_in_ball(p, split, [&](std::span<const Letter> w) {
    if (w.size() == split && !w.empty()) tasks.emplace_back(w.begin(), w.end());
  });

  FreenessCertificate cert;
  cert.depth = L;
  std::optional<Word> best;
  std::uint64_t words = 0;
  const bool parallel = kernel == Kernel::Parallel;

  // words strictly shorter than the split depth, except the identity
  if (split == 2) {
    for (Letter l : letters) {
      ++words;
      if (is_identity(mod_letter[l]) && real.letter(l).is_identity()) {
        Word g = from_letters(std::span<const Letter>(&l, 1), p);
        if (!best || shortlex_less(g, *best)) best = g;
      }
    }
  }

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    Search s{real, letters, mod_letter, L, 0, std::nullopt};
    std::vector<Letter> prefix = tasks[t];
    ModMatrix m = mod_letter[prefix[0]];
    for (std::size_t k = 1; k < prefix.size(); ++k) m = mul(m, mod_letter[prefix[k]]);
    // the task checks its prefix and all extensions; the prefix's own
    // length-1 truncation was counted above
    s.run(prefix, m);
#pragma omp critical(conglab_freeness)
    {
      words += s.words;
      if (s.best && (!best || shortlex_less(*s.best, *best))) best = s.best;
    }
  }
  cert.words = words;
  cert.counterexample = best;
  cert.certified = !best;
  return cert;
}

FreenessCertificate certify(GroupRealization& real, std::size_t L) {
  auto cert = certify_ball_freeness(real, L);
  if (cert.certified && L > real.certified_depth) real.certified_depth = L;
  return cert;
}

}  // namespace conglab
