#include <omp.h>

#include <algorithm>

#include "conglab/partition.hpp"

namespace conglab {

namespace {

// Letters of f_i g, written into out.
void left_image(const Presentation& p, Letter f, std::span<const Letter> g, std::vector<Letter>& out) {
  out.clear();
  const bool tau = p.is_tau(letter_gen(f));
  std::size_t drop = 0;
  if (!tau && !g.empty() && g[0] == (f ^ 1U)) {
    drop = 1;
  } else if (tau && g.size() >= 3 && g[0] == f && g[1] == f && g[2] == f) {
    drop = 3;
  } else {
    out.push_back(f);
  }
  out.insert(out.end(), g.begin() + static_cast<long>(drop), g.end());
}

bool letters_shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Found {
  std::vector<Letter> g;
  std::size_t congruence = 0;
  bool operator<(const Found& o) const {
    if (g != o.g) return letters_shortlex_less(g, o.g);
    return congruence < o.congruence;
  }
};

struct Walker {
  const GroupPartition& part;
  const std::vector<Letter>& letters;
  std::size_t L;
  std::uint64_t words = 0;
  std::uint64_t checks = 0;
  std::optional<Found> best;
  std::vector<Letter> image;

  void check(std::span<const Letter> g) {
    ++words;
    const auto& sys = part.system();
    const auto& p = part.presentation();
    int piece = part.assign(g);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      ++checks;
      left_image(p, letter_code(i, true), g, image);
      int other = part.assign(std::span<const Letter>(image));
      if (sys[i].left.test(piece) == sys[i].right.test(other)) continue;
      Found f{std::vector<Letter>(g.begin(), g.end()), i};
      if (!best || f < *best) best = std::move(f);
    }
  }

  void run(std::vector<Letter>& prefix) {
    check(prefix);
    if (prefix.size() == L) return;
    for (Letter l : letters) {
      if (!letter_allowed(part.presentation(), prefix, l)) continue;
      prefix.push_back(l);
      run(prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

PartitionReport verify_group_partition(const GroupPartition& part, std::size_t L, Kernel kernel) {
  const Presentation& p = part.presentation();
  const auto letters = alphabet(p);
  PartitionReport rep;
  rep.depth = L;

  std::vector<std::vector<Letter>> tasks;
  const std::size_t split = std::min<std::size_t>(L, 2);
  Walker shallow{part, letters, L, 0, 0, std::nullopt, {}};
  for_each_in_ball(p, split, [&](std::span<const Letter> w) {
    if (w.size() == split) tasks.emplace_back(w.begin(), w.end());
    else shallow.check(w);
  });

  std::uint64_t words = shallow.words, checks = shallow.checks;
  std::optional<Found> best = shallow.best;
  const bool parallel = kernel == Kernel::Parallel;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    Walker w{part, letters, L, 0, 0, std::nullopt, {}};
    std::vector<Letter> prefix = tasks[t];
    w.run(prefix);
#pragma omp critical(conglab_partition_verify)
    {
      words += w.words;
      checks += w.checks;
      if (w.best && (!best || *w.best < *best)) best = w.best;
    }
  }

  rep.words = words;
  rep.checks = checks;
  if (best) {
    rep.passed = false;
    PartitionViolation v;
    v.g = from_letters(best->g, p);
    v.congruence = best->congruence;
    v.image = left_multiply(letter_code(best->congruence, true), v.g, p);
    v.piece = part.assign(v.g);
    v.image_piece = part.assign(v.image);
    rep.violation = std::move(v);
  }
  return rep;
}

std::string describe(const PartitionViolation& v, const Presentation& p) {
  return "congruence " + std::to_string(v.congruence + 1) + ": g = " + format_word(v.g, p) + " in piece " +
         std::to_string(v.piece) + ", f g = " + format_word(v.image, p) + " in piece " + std::to_string(v.image_piece);
}

}  // namespace conglab
