#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conglab/closure.hpp"
#include "conglab/graph.hpp"
#include "conglab/kernel.hpp"
#include "conglab/system.hpp"
#include "conglab/words.hpp"

namespace conglab {

// Witness group of a transformed system: sigma_i for i < m_bar, tau_i above.
Presentation witness_presentation(const CongruenceSystem& sys, std::size_t m_bar);

// Domain and range of a letter acting as a witness: sigma_i and tau_i map
// L_i onto R_i, sigma_i^-1 maps R_i onto L_i.
PieceMask letter_domain(const CongruenceSystem& sys, Letter l);
PieceMask letter_range(const CongruenceSystem& sys, Letter l);

// Two-coloring of the proper masks: a mask and its complement get opposite
// colors, masks congruent under the first m_bar congruences share one.
// In each complementary pair of classes, the class holding the smallest mask
// (by numeric value) gets color 0.
class TwoColoring {
 public:
  // Throws std::invalid_argument when the first m_bar congruences are not weak.
  TwoColoring(const CongruenceSystem& sys, std::size_t m_bar);

  int color(const PieceMask& m) const;
  PieceMask representative(const PieceMask& m) const;  // smallest mask of the class

 private:
  CongruenceClosure closure_;
  std::vector<PieceMask> least_;  // per class id
};

enum class EndSegmentCase {
  Identity,  // the anchor is the identity
  Split,     // some range meets both the next domain and its complement
  Chain,     // every range is the next domain or its complement
};

// Partition of the witness group realizing the congruences. Pieces are 1..r. The anchor is
// placed in the same piece as the identity.
class GroupPartition {
 public:
  // Throws std::invalid_argument if the anchor has odd tau parity, a
  // congruence past m_bar is not self-complement, or the leading part is not
  // weak.
  GroupPartition(const CongruenceSystem& sys, std::size_t m_bar, const Word& anchor);

  const CongruenceSystem& system() const { return sys_; }
  const Presentation& presentation() const { return pres_; }
  std::size_t m_bar() const { return m_bar_; }
  const Word& anchor() const { return anchor_; }
  const TwoColoring& coloring() const { return coloring_; }
  EndSegmentCase end_segment_case() const { return case_; }
  std::size_t split_index() const { return split_; }  // 1-based j of the split case, else 0
  // piece of the anchor suffix with k letters, k = 0..|anchor|
  const std::vector<int>& end_segment_pieces() const { return seg_; }

  // Direct evaluation: longest common suffix with the anchor, then one table
  // step per remaining letter. Thread safe.
  int assign(std::span<const Letter> letters) const;
  int assign(const Word& g) const;
  // The recursion on the leftmost letter with a memo table. Not thread safe.
  int assign_memoized(const Word& g) const;

  bool in_union(int piece, const PieceMask& m) const { return m.test(piece); }

  // Forces the reported piece of one word, for fault-injection tests.
  void inject_fault(const Word& g, int piece);

 private:
  int step(Letter l, int piece) const { return step_[static_cast<std::size_t>(l) * (r_ + 1) + piece]; }
  int assign_raw(std::span<const Letter> letters) const;
  void place_end_segments();

  CongruenceSystem sys_;
  std::size_t m_bar_;
  Presentation pres_;
  Word anchor_;
  std::vector<Letter> anchor_letters_;
  TwoColoring coloring_;
  std::size_t r_;
  std::vector<int> step_;  // [letter][piece]
  EndSegmentCase case_ = EndSegmentCase::Identity;
  std::size_t split_ = 0;
  std::vector<int> seg_;
  std::vector<std::pair<std::vector<Letter>, int>> faults_;
  mutable std::unordered_map<Word, int, WordHash> memo_;
};

GroupPartition build_group_partition(const CongruenceSystem& sys, std::size_t m_bar, const Word& anchor);

struct PartitionViolation {
  Word g;
  Word image;  // f_i g
  std::size_t congruence = 0;
  int piece = 0;
  int image_piece = 0;
};

struct PartitionReport {
  bool passed = true;
  std::size_t depth = 0;
  std::uint64_t words = 0;
  std::uint64_t checks = 0;
  std::optional<PartitionViolation> violation;  // shortlex least g, then least i
};

// For every g of length <= L and every i: g in the union of L_i iff f_i g is
// in the union of R_i.
PartitionReport verify_group_partition(const GroupPartition& part, std::size_t L, Kernel kernel = Kernel::Parallel);

std::string describe(const PartitionViolation& v, const Presentation& p);

// ---------------------------------------------------------------------------
// M_g recursion

using MembershipOracle = std::function<PieceMask(const Word&)>;

struct MgEntry {
  PieceMask m;
  PieceMask plus;  // m together with the oracle's pieces
};

class MgState {
 public:
  // Section2: every congruence has a free witness. Section4: witnesses past
  // m_bar have order four. k_bar is a piece index 1..r. An empty oracle
  // means no point of the orbit is in any piece yet.
  MgState(const CongruenceSystem& sys, Variant flavor, std::size_t m_bar, int k_bar, MembershipOracle oracle = {});

  const CongruenceSystem& system() const { return sys_; }
  const Presentation& presentation() const { return pres_; }
  Variant flavor() const { return flavor_; }
  std::size_t m_bar() const { return m_bar_; }
  int k_bar() const { return k_bar_; }

  PieceMask membership(const Word& g) const;
  // Throws InvariantViolation if both L_i and its complement lie in M+ of
  // the shorter word.
  const MgEntry& compute(const Word& g);
  const MgEntry& compute(std::span<const Letter> letters);

 private:
  CongruenceSystem sys_;
  Variant flavor_;
  std::size_t m_bar_;
  Presentation pres_;
  int k_bar_;
  MembershipOracle oracle_;
  std::unordered_map<Word, MgEntry, WordHash> table_;
};

struct MgReport {
  bool passed = true;
  std::size_t depth = 0;
  std::uint64_t words = 0;
  // first (g, i, complemented) where L ⊆ M+_g and R ⊆ M+_{f_i g} disagree
  std::optional<std::pair<Word, std::size_t>> equivalence_violation;
  bool equivalence_complemented = false;
  std::optional<Word> full_plus;  // some g with M+_g the whole set

  // words with nonempty M, searched without a length cap up to trace_bound
  std::size_t trace_bound = 0;
  std::uint64_t traces = 0;
  std::size_t longest_trace = 0;
  std::optional<Word> linkage_violation;  // a step with no matching digraph edge
  bool trace_bound_reached = false;
};

// trace_bound 0 selects 2^r (Section2) or 2^(r+1) (Section4).
MgReport mg_edge_property_check(MgState& state, std::size_t L, std::size_t trace_bound = 0);

// ---------------------------------------------------------------------------
// Orbits with a fixed word

class OrbitModel {
 public:
  // Throws std::invalid_argument unless w is nonidentity, of even tau parity,
  // and does not end in rho' (w = tau_i^2 excepted).
  OrbitModel(const Presentation& p, const Word& w, std::size_t power_bound = 16);

  const Presentation& presentation() const { return pres_; }
  const Word& fixed_word() const { return w_; }
  Letter rho() const { return rho_; }
  Letter rho_prime() const { return rho_prime_; }
  bool tau_square() const { return tau_square_; }
  std::size_t power_bound() const { return bound_; }
  // Suffix a canonical word may not end in, besides w: rho' when w starts
  // with a sigma letter, tau_i^(4-a) when w starts with the block tau_i^a.
  const Word& forbidden_suffix() const { return forbidden_; }

  bool is_canonical(const Word& g) const;
  // The representative g w^j: take a shortest g w^j, and if it is not
  // canonical use the next power instead. Throws BudgetExceeded when the
  // shortest candidate sits at |j| = power_bound.
  Word canonical_form(const Word& g) const;

 private:
  Presentation pres_;
  Word w_;
  Word w_inv_;
  Word forbidden_;
  Letter rho_ = 0;
  Letter rho_prime_ = 0;
  bool tau_square_ = false;
  std::size_t bound_;
};

// Pieces of the orbit points g(x). Without a model the orbit is free and the
// group partition is used as is.
class OrbitPartition {
 public:
  // Throws std::invalid_argument if the model's fixed word is not the anchor.
  OrbitPartition(const GroupPartition& part, std::optional<OrbitModel> model);

  const GroupPartition& group_partition() const { return part_; }
  const std::optional<OrbitModel>& model() const { return model_; }
  Word representative(const Word& g) const;
  int assign(const Word& g) const;

 private:
  const GroupPartition& part_;
  std::optional<OrbitModel> model_;
};

OrbitPartition build_orbit_partition(const GroupPartition& part, std::optional<OrbitModel> model);

struct OrbitPartitionReport {
  bool passed = true;
  std::size_t depth = 0;
  std::uint64_t points = 0;  // distinct representatives met
  std::uint64_t checks = 0;
  std::uint64_t exceptional = 0;  // representative of f_i y is not f_i times that of y
  std::optional<PartitionViolation> violation;
};

OrbitPartitionReport verify_orbit_partition(const OrbitPartition& op, std::size_t L);

}  // namespace conglab
