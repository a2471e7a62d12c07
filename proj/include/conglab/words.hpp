#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conglab {

enum class GeneratorOrder : std::uint8_t { Infinite, Four };

// Free product of m_bar copies of Z (generators sigma_1..sigma_mbar, indices
// 0..m_bar-1) and further copies of Z_4 (tau generators, the remaining
// indices). Generator i witnesses congruence i.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::size_t m_bar, std::size_t order_four);
  static Presentation free_group(std::size_t m) { return Presentation(m, 0); }

  std::size_t generators() const { return m_; }
  std::size_t free_count() const { return m_bar_; }
  std::size_t tau_count() const { return m_ - m_bar_; }
  GeneratorOrder order(std::size_t g) const { return g < m_bar_ ? GeneratorOrder::Infinite : GeneratorOrder::Four; }
  bool is_tau(std::size_t g) const { return g >= m_bar_; }

  bool operator==(const Presentation&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t m_bar_ = 0;
};

struct Syllable {
  std::uint16_t gen = 0;
  std::int32_t exp = 0;
  bool operator==(const Syllable&) const = default;
};

// A letter is a single generator or inverse generator: code 2g is sigma_g^-1,
// code 2g+1 is sigma_g or tau_g. Codes order letters as the enumeration does.
using Letter = std::uint16_t;
constexpr Letter letter_code(std::size_t gen, bool positive) { return static_cast<Letter>(2 * gen + (positive ? 1 : 0)); }
constexpr std::size_t letter_gen(Letter l) { return l >> 1; }
constexpr bool letter_positive(Letter l) { return (l & 1U) != 0; }

// Reduced word, leftmost syllable first. Words act on the left, so the
// rightmost syllable is applied first.
class Word {
 public:
  Word() = default;

  static Word identity() { return {}; }
  static Word generator(const Presentation& p, std::size_t gen, std::int32_t exp = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  std::size_t length() const;  // total exponent magnitude
  std::vector<Letter> letters() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word reduce(const std::vector<Syllable>& raw, const Presentation& p);
  std::vector<Syllable> syl_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Length first, then letters left to right by letter code.
bool shortlex_less(const Word& a, const Word& b);

Word reduce(const std::vector<Syllable>& raw, const Presentation& p);
Word from_letters(std::span<const Letter> letters, const Presentation& p);
Word multiply(const Word& a, const Word& b, const Presentation& p);
Word inverse(const Word& a, const Presentation& p);
Word power(const Word& g, long n, const Presentation& p);
Word left_multiply(Letter l, const Word& g, const Presentation& p);

struct TripleDecomposition {
  Word h1, h2, h3;
};
TripleDecomposition decompose(const Word& g, const Presentation& p);

// 0 means infinite order.
unsigned element_order(const Word& g, const Presentation& p);

enum class Parity { Even, Odd };
Parity tau_parity(const Word& g, const Presentation& p);

bool ends_with(const Word& g, const Word& suffix);

// Text form "s1 s2^-1 t1^3"; sI is the I-th sigma, tI the I-th tau; "e" is
// the identity.
Word parse_word(std::string_view text, const Presentation& p);
std::string format_word(const Word& g, const Presentation& p);

// Every reduced word of length <= L in shortlex order.
std::vector<Word> enumerate_ball(const Presentation& p, std::size_t L);
// Visits every reduced letter string of length <= L (depth first).
void for_each_in_ball(const Presentation& p, std::size_t L, const std::function<void(std::span<const Letter>)>& visit);
// Letters allowed after `prev` (or at the start when prev is empty) in a reduced word.
bool letter_allowed(const Presentation& p, std::span<const Letter> prefix, Letter next);
std::vector<Letter> alphabet(const Presentation& p);

// Ball sizes by transfer-matrix recurrence over (last letter, tau run) states.
std::vector<std::uint64_t> sphere_sizes(const Presentation& p, std::size_t L);
std::uint64_t ball_size(const Presentation& p, std::size_t L);

}  // namespace conglab
