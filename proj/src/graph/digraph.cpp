#include <stdexcept>

#include "conglab/errors.hpp"
#include "conglab/graph.hpp"

namespace conglab {

namespace {

struct Rule {
  PieceMask condition;
  PieceMask target;
};

Rule rule_for(const Congruence& c, bool inverse, bool complemented) {
  const PieceMask& src = inverse ? c.right : c.left;
  const PieceMask& dst = inverse ? c.left : c.right;
  if (complemented) return {src.complement(), dst.complement()};
  return {src, dst};
}

bool tau_congruence(Variant variant, std::size_t m_bar, std::size_t i) {
  return variant == Variant::Section4 && i >= m_bar;
}

}  // namespace

std::string edge_label(const DigraphEdge& e) {
  std::string n = std::to_string(e.congruence + 1);
  if (e.tau) return "tau" + n;
  return e.inverse ? "f" + n + "^-1" : "f" + n;
}

std::string describe_edge(const DigraphEdge& e) {
  return e.from.to_string() + " -> " + e.to.to_string() + " [" + edge_label(e) + (e.good ? "" : ", bad") + "]";
}

std::optional<DigraphEdge> rederive_edge(const CongruenceSystem& sys, Variant variant, std::size_t m_bar,
                                         const PieceMask& from, std::size_t congruence, bool inverse,
                                         bool complemented) {
  if (congruence >= sys.size()) return std::nullopt;
  bool tau = tau_congruence(variant, m_bar, congruence);
  if (tau && inverse) return std::nullopt;
  Rule rule = rule_for(sys[congruence], inverse, complemented);
  if (!rule.condition.subset_of(from)) return std::nullopt;
  DigraphEdge e;
  e.from = from;
  e.to = rule.target;
  e.congruence = congruence;
  e.inverse = inverse;
  e.complemented = complemented;
  e.good = from == rule.condition;
  e.tau = tau;
  return e;
}

CongruenceDigraph::CongruenceDigraph(const CongruenceSystem& sys, Variant variant, std::size_t m_bar)
    : sys_(sys), variant_(variant), m_bar_(m_bar == npos ? sys.size() : m_bar) {
  const int r = sys.pieces();
  if (r > static_cast<int>(kMaxPieces)) throw BudgetExceeded("digraph needs r <= 12, got r = " + std::to_string(r), 0);
  if (m_bar_ > sys.size()) throw std::invalid_argument("m_bar exceeds the number of congruences");
  if (variant == Variant::Section2 && m_bar_ != sys.size())
    throw std::invalid_argument("the Section2 digraph has no self-complement part");
  for (std::size_t i = m_bar_; i < sys.size(); ++i)
    if (!sys[i].self_complement())
      throw std::invalid_argument("congruence " + std::to_string(i + 1) + " is not self-complement");

  n_ = (std::size_t{1} << r) - 2;
  offset_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    PieceMask s = mask_of(v);
    offset_[v] = edges_.size();
    for (std::size_t i = 0; i < sys.size(); ++i)
      for (int rule = 0; rule < 4; ++rule)
        if (auto e = rederive_edge(sys, variant, m_bar_, s, i, rule >= 2, rule % 2 == 1)) edges_.push_back(*e);
  }
  offset_[n_] = edges_.size();
  out_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out_[e] = e;
}

std::size_t CongruenceDigraph::good_count() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.good ? 1 : 0;
  return n;
}

}  // namespace conglab
