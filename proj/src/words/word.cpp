#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "conglab/errors.hpp"
#include "conglab/words.hpp"

namespace conglab {

namespace {

std::int32_t normalize(std::int32_t e, bool tau) {
  if (!tau) return e;
  e %= 4;
  return e < 0 ? e + 4 : e;
}

}  // namespace

Word Word::generator(const Presentation& p, std::size_t gen, std::int32_t exp) {
  if (gen >= p.generators()) throw std::out_of_range("generator index out of range");
  return reduce({{static_cast<std::uint16_t>(gen), exp}}, p);
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::size_t>(std::abs(s.exp));
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const auto& s : syl_) {
    Letter l = letter_code(s.gen, s.exp > 0);
    for (std::int32_t k = 0; k < std::abs(s.exp); ++k) out.push_back(l);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : w.syllables()) {
    h = (h ^ s.gen) * 0x100000001B3ULL;
    h = (h ^ static_cast<std::uint32_t>(s.exp)) * 0x100000001B3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  auto la = a.letters(), lb = b.letters();
  return la < lb;
}

Word reduce(const std::vector<Syllable>& raw, const Presentation& p) {
  Word out;
  auto& st = out.syl_;
  for (auto s : raw) {
    if (s.gen >= p.generators()) throw std::out_of_range("generator index out of range");
    bool tau = p.is_tau(s.gen);
    s.exp = normalize(s.exp, tau);
    if (s.exp == 0) continue;
    if (!st.empty() && st.back().gen == s.gen) {
      st.back().exp = normalize(st.back().exp + s.exp, tau);
      if (st.back().exp == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
  }
  return out;
}

Word from_letters(std::span<const Letter> letters, const Presentation& p) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (Letter l : letters) raw.push_back({static_cast<std::uint16_t>(letter_gen(l)), letter_positive(l) ? 1 : -1});
  return reduce(raw, p);
}

Word multiply(const Word& a, const Word& b, const Presentation& p) {
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return reduce(raw, p);
}

Word inverse(const Word& a, const Presentation& p) {
  std::vector<Syllable> raw;
  raw.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it) raw.push_back({it->gen, -it->exp});
  return reduce(raw, p);
}

Word left_multiply(Letter l, const Word& g, const Presentation& p) {
  std::vector<Syllable> raw;
  raw.reserve(g.syllables().size() + 1);
  raw.push_back({static_cast<std::uint16_t>(letter_gen(l)), letter_positive(l) ? 1 : -1});
  raw.insert(raw.end(), g.syllables().begin(), g.syllables().end());
  return reduce(raw, p);
}

bool ends_with(const Word& g, const Word& suffix) {
  auto a = g.letters(), b = suffix.letters();
  return b.size() <= a.size() && std::equal(b.rbegin(), b.rend(), a.rbegin());
}

Word parse_word(std::string_view text, const Presentation& p) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg + " in word '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
  };
  auto digits = [&]() -> long {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 9) fail("expected a number");
    return std::stol(std::string(text.substr(start, i - start)));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 'e') {
      ++i;
      continue;
    }
    if (c != 's' && c != 't') fail("expected 's', 't' or 'e'");
    ++i;
    long idx = digits();
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      exp = digits();
      if (neg) exp = -exp;
    }
    std::size_t gen;
    if (c == 's') {
      if (idx < 1 || static_cast<std::size_t>(idx) > p.free_count()) fail("sigma index out of range");
      gen = static_cast<std::size_t>(idx - 1);
    } else {
      if (idx < 1 || static_cast<std::size_t>(idx) > p.tau_count()) fail("tau index out of range");
      gen = p.free_count() + static_cast<std::size_t>(idx - 1);
    }
    raw.push_back({static_cast<std::uint16_t>(gen), static_cast<std::int32_t>(exp)});
  }
  return reduce(raw, p);
}

std::string format_word(const Word& g, const Presentation& p) {
  if (g.is_identity()) return "e";
  std::string out;
  for (const auto& s : g.syllables()) {
    if (!out.empty()) out += ' ';
    if (p.is_tau(s.gen))
      out += "t" + std::to_string(s.gen - p.free_count() + 1);
    else
      out += "s" + std::to_string(s.gen + 1);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace conglab
