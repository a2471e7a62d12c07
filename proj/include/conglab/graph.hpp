#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conglab/system.hpp"

namespace conglab {

enum class Variant { Section2, Section4 };

// Rules, indexed by the subset condition they test: 0 L ⊆ S, 1 L^c ⊆ S,
// 2 R ⊆ S, 3 R^c ⊆ S.
struct DigraphEdge {
  PieceMask from;
  PieceMask to;
  std::size_t congruence = 0;
  bool inverse = false;       // labeled f_i^-1
  bool complemented = false;  // rule used the complemented sides
  bool good = false;
  bool tau = false;  // Section4 self-complement edge, labeled tau_i
};

std::string edge_label(const DigraphEdge& e);  // f3, f3^-1, tau3 (one-based)
std::string describe_edge(const DigraphEdge& e);

class CongruenceDigraph {
 public:
  static constexpr std::size_t kMaxPieces = 12;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  // m_bar defaults to m for Section2. For Section4 every congruence with
  // index >= m_bar must be self-complement.
  explicit CongruenceDigraph(const CongruenceSystem& sys, Variant variant = Variant::Section2, std::size_t m_bar = npos);

  const CongruenceSystem& system() const { return sys_; }
  Variant variant() const { return variant_; }
  std::size_t m_bar() const { return m_bar_; }
  int pieces() const { return sys_.pieces(); }

  std::size_t vertex_count() const { return n_; }
  std::size_t id_of(const PieceMask& m) const { return static_cast<std::size_t>(m.low_word() - 1); }
  PieceMask mask_of(std::size_t id) const { return PieceMask::from_bits(sys_.pieces(), id + 1); }

  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const DigraphEdge& edge(std::size_t e) const { return edges_[e]; }
  std::span<const std::size_t> out(std::size_t v) const {
    return {out_.data() + offset_[v], offset_[v + 1] - offset_[v]};
  }
  std::size_t good_count() const;

 private:
  CongruenceSystem sys_;
  Variant variant_;
  std::size_t m_bar_;
  std::size_t n_ = 0;
  std::vector<DigraphEdge> edges_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> out_;
};

// Edge rederived from its provenance; empty when the rule does not apply.
std::optional<DigraphEdge> rederive_edge(const CongruenceSystem& sys, Variant variant, std::size_t m_bar,
                                         const PieceMask& from, std::size_t congruence, bool inverse,
                                         bool complemented);

struct UndirectedEdge {
  PieceMask a;
  PieceMask b;
  std::size_t congruence = 0;
  bool complemented = false;
  bool self_complement = false;  // Section4 tau edge
  std::size_t forward = 0;       // the two directed good edges
  std::size_t backward = 0;
};

struct UndirectedQuotient {
  std::vector<UndirectedEdge> edges;
  std::vector<std::size_t> component;  // per vertex id
  std::size_t component_count = 0;
};

UndirectedQuotient build_quotient(const CongruenceDigraph& g);

struct Claim1Result {
  bool holds = true;
  std::vector<std::size_t> cycle;  // edge ids, starting with the bad edge
};

struct Claim2Result {
  bool holds = true;
  std::vector<std::size_t> cycle;                  // undirected edge ids
  std::vector<std::size_t> self_complement_edges;  // two tau edges sharing a component
  std::size_t component = 0;
};

struct Claim3Result {
  bool holds = true;
  std::size_t bound = 0;
  std::vector<std::size_t> path;  // forbidden-pattern-free path of `bound` edges
  bool unbounded = false;         // such paths exist of every length
  std::size_t longest = 0;        // longest free path when bounded
  std::size_t states = 0;
};

Claim1Result check_claim1(const CongruenceDigraph& g);
Claim2Result check_claim2(const CongruenceDigraph& g);
Claim2Result check_claim2(const CongruenceDigraph& g, const UndirectedQuotient& q);
// bound 0 selects 2^r (Section2) or 2^(r+1) (Section4); path length counts edges.
Claim3Result check_claim3(const CongruenceDigraph& g, std::size_t bound = 0, std::size_t budget = 0);

std::size_t default_claim3_bound(const CongruenceDigraph& g);

// Whether a sequence of edges is a walk free of the patterns check_claim3 forbids.
bool is_free_walk(const CongruenceDigraph& g, std::span<const std::size_t> path);

std::string to_dot(const CongruenceDigraph& g);

}  // namespace conglab
