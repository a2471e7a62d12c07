#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace conglab {

// Subset of the piece indices {1,...,r}. Index k lives in bit k-1; the first
// 64 bits are stored inline, larger universes spill into a vector.
class PieceMask {
 public:
  PieceMask() = default;
  explicit PieceMask(int r);

  static PieceMask full(int r);
  static PieceMask of(int r, std::initializer_list<int> indices);
  static PieceMask of(int r, const std::vector<int>& indices);
  static PieceMask from_bits(int r, std::uint64_t bits);

  int universe() const { return r_; }

  bool test(int k) const;
  void set(int k);
  void reset(int k);

  int count() const;
  bool empty() const;
  bool is_full() const;
  // nonempty and not the whole universe
  bool proper() const { return !empty() && !is_full(); }

  PieceMask complement() const;
  bool subset_of(const PieceMask& other) const;
  bool proper_subset_of(const PieceMask& other) const { return subset_of(other) && *this != other; }
  bool intersects(const PieceMask& other) const;

  PieceMask operator|(const PieceMask& o) const;
  PieceMask operator&(const PieceMask& o) const;
  PieceMask operator-(const PieceMask& o) const;
  PieceMask& operator|=(const PieceMask& o);
  PieceMask& operator&=(const PieceMask& o);

  std::vector<int> indices() const;
  int lowest() const;  // 0 if empty

  // bits 0..63; only meaningful as a full value when r <= 64
  std::uint64_t low_word() const { return w0_; }
  std::uint64_t word(std::size_t i) const { return i == 0 ? w0_ : (i - 1 < hi_.size() ? hi_[i - 1] : 0); }
  std::size_t word_count() const { return 1 + hi_.size(); }

  bool operator==(const PieceMask& o) const = default;
  // numeric order of the bit vector, most significant word first
  std::strong_ordering operator<=>(const PieceMask& o) const;

  std::size_t hash() const;
  std::string to_string() const;  // "{1 3 4}"

 private:
  void trim();

  int r_ = 0;
  std::uint64_t w0_ = 0;
  std::vector<std::uint64_t> hi_;
};

struct PieceMaskHash {
  std::size_t operator()(const PieceMask& m) const { return m.hash(); }
};

}  // namespace conglab
