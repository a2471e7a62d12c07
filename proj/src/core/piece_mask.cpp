#include "conglab/piece_mask.hpp"

#include <bit>
#include <stdexcept>

namespace conglab {

namespace {

std::size_t hi_words(int r) { return r <= 64 ? 0 : static_cast<std::size_t>((r - 1) / 64); }

}  // namespace

PieceMask::PieceMask(int r) : r_(r), hi_(hi_words(r), 0) {
  if (r < 0) throw std::invalid_argument("negative piece count");
}

PieceMask PieceMask::full(int r) {
  PieceMask m(r);
  if (r == 0) return m;
  m.w0_ = ~std::uint64_t{0};
  for (auto& w : m.hi_) w = ~std::uint64_t{0};
  m.trim();
  return m;
}

PieceMask PieceMask::of(int r, std::initializer_list<int> indices) {
  PieceMask m(r);
  for (int k : indices) m.set(k);
  return m;
}

PieceMask PieceMask::of(int r, const std::vector<int>& indices) {
  PieceMask m(r);
  for (int k : indices) m.set(k);
  return m;
}

PieceMask PieceMask::from_bits(int r, std::uint64_t bits) {
  PieceMask m(r);
  m.w0_ = bits;
  m.trim();
  return m;
}

void PieceMask::trim() {
  int top = r_ - 64 * static_cast<int>(hi_.size());
  std::uint64_t& last = hi_.empty() ? w0_ : hi_.back();
  if (top < 64) last &= (top <= 0 ? 0 : (std::uint64_t{1} << top) - 1);
}

bool PieceMask::test(int k) const {
  if (k < 1 || k > r_) return false;
  int b = k - 1;
  std::uint64_t w = b < 64 ? w0_ : hi_[static_cast<std::size_t>(b / 64 - 1)];
  return (w >> (b % 64)) & 1U;
}

void PieceMask::set(int k) {
  if (k < 1 || k > r_) throw std::out_of_range("piece index out of range");
  int b = k - 1;
  std::uint64_t& w = b < 64 ? w0_ : hi_[static_cast<std::size_t>(b / 64 - 1)];
  w |= std::uint64_t{1} << (b % 64);
}

void PieceMask::reset(int k) {
  if (k < 1 || k > r_) return;
  int b = k - 1;
  std::uint64_t& w = b < 64 ? w0_ : hi_[static_cast<std::size_t>(b / 64 - 1)];
  w &= ~(std::uint64_t{1} << (b % 64));
}

int PieceMask::count() const {
  int c = std::popcount(w0_);
  for (auto w : hi_) c += std::popcount(w);
  return c;
}

bool PieceMask::empty() const {
  if (w0_) return false;
  for (auto w : hi_)
    if (w) return false;
  return true;
}

bool PieceMask::is_full() const { return count() == r_; }

PieceMask PieceMask::complement() const {
  PieceMask m(*this);
  m.w0_ = ~m.w0_;
  for (auto& w : m.hi_) w = ~w;
  m.trim();
  return m;
}

bool PieceMask::subset_of(const PieceMask& o) const {
  if (w0_ & ~o.w0_) return false;
  for (std::size_t i = 0; i < hi_.size(); ++i)
    if (hi_[i] & ~o.word(i + 1)) return false;
  return true;
}

bool PieceMask::intersects(const PieceMask& o) const {
  if (w0_ & o.w0_) return true;
  for (std::size_t i = 0; i < hi_.size(); ++i)
    if (hi_[i] & o.word(i + 1)) return true;
  return false;
}

PieceMask PieceMask::operator|(const PieceMask& o) const {
  PieceMask m(*this);
  m |= o;
  return m;
}

PieceMask PieceMask::operator&(const PieceMask& o) const {
  PieceMask m(*this);
  m &= o;
  return m;
}

PieceMask PieceMask::operator-(const PieceMask& o) const {
  PieceMask m(*this);
  m.w0_ &= ~o.w0_;
  for (std::size_t i = 0; i < m.hi_.size(); ++i) m.hi_[i] &= ~o.word(i + 1);
  return m;
}

PieceMask& PieceMask::operator|=(const PieceMask& o) {
  w0_ |= o.w0_;
  for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] |= o.word(i + 1);
  return *this;
}

PieceMask& PieceMask::operator&=(const PieceMask& o) {
  w0_ &= o.w0_;
  for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] &= o.word(i + 1);
  return *this;
}

std::vector<int> PieceMask::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < word_count(); ++i) {
    std::uint64_t w = word(i);
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * 64 + b + 1);
      w &= w - 1;
    }
  }
  return out;
}

int PieceMask::lowest() const {
  for (std::size_t i = 0; i < word_count(); ++i) {
    std::uint64_t w = word(i);
    if (w) return static_cast<int>(i) * 64 + std::countr_zero(w) + 1;
  }
  return 0;
}

std::strong_ordering PieceMask::operator<=>(const PieceMask& o) const {
  if (auto c = r_ <=> o.r_; c != 0) return c;
  for (std::size_t i = hi_.size(); i > 0; --i)
    if (auto c = hi_[i - 1] <=> o.hi_[i - 1]; c != 0) return c;
  return w0_ <=> o.w0_;
}

std::size_t PieceMask::hash() const {
  std::uint64_t h = w0_ * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(r_);
  for (auto w : hi_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return static_cast<std::size_t>(h ^ (h >> 32));
}

std::string PieceMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int k : indices()) {
    if (!first) s += ' ';
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

}  // namespace conglab
