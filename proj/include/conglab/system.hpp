#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conglab/piece_mask.hpp"

namespace conglab {

struct Congruence {
  PieceMask left;
  PieceMask right;

  bool operator==(const Congruence&) const = default;
  bool identity() const { return left == right; }
  bool self_complement() const { return right == left.complement(); }
};

// r pieces and an ordered list of proper congruences. Congruence numbers are
// zero-based in the API and one-based in every printed or serialized form.
class CongruenceSystem {
 public:
  CongruenceSystem() = default;
  explicit CongruenceSystem(int r) : r_(r) {}
  CongruenceSystem(int r, std::vector<Congruence> congruences);

  int pieces() const { return r_; }
  std::size_t size() const { return congruences_.size(); }
  bool empty() const { return congruences_.empty(); }

  const Congruence& operator[](std::size_t i) const { return congruences_[i]; }
  const std::vector<Congruence>& congruences() const { return congruences_; }

  void add(PieceMask left, PieceMask right);
  void add(std::initializer_list<int> left, std::initializer_list<int> right);
  CongruenceSystem without(std::size_t index) const;
  CongruenceSystem prefix(std::size_t count) const;

  bool operator==(const CongruenceSystem&) const = default;

 private:
  int r_ = 0;
  std::vector<Congruence> congruences_;
};

struct ParsedSystem {
  CongruenceSystem system;
  std::vector<std::string> notes;  // e.g. identity congruences, flagged but kept
};

ParsedSystem parse_system_text(std::string_view text);
CongruenceSystem parse_system(std::string_view text);
std::string print_system(const CongruenceSystem& sys);

// Named systems from the literature used as fixtures.
namespace fixtures {
CongruenceSystem hausdorff();
CongruenceSystem robinson();
CongruenceSystem five_set();
// {1} ~ {2} over two pieces: the single self-complement congruence
CongruenceSystem swap();
// consistent but not weak: {1} ~ {2} ~ {3}, {1 4} ~ {2 3 5}
CongruenceSystem padded_hausdorff();
// consistent, two self-complement congruences after the transform
CongruenceSystem double_tau();
// {1} ~ {2} twice
CongruenceSystem duplicate();
// {1} ~ {2} and {2} ~ {1}
CongruenceSystem double_congruence();
}  // namespace fixtures

}  // namespace conglab
