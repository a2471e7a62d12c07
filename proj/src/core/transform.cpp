#include "conglab/transform.hpp"

#include <map>

#include "conglab/classify.hpp"
#include "conglab/closure.hpp"
#include "conglab/errors.hpp"

namespace conglab {

std::size_t minimum_congruence_count(const CongruenceSystem& sys) {
  CongruenceClosure closure(sys);
  std::map<int, std::size_t> sizes;
  for (const auto& m : closure.touched()) ++sizes[closure.class_of(m)];
  std::size_t total = 0;
  for (const auto& m : closure.touched()) {
    int c = closure.class_of(m);
    auto it = sizes.find(c);
    if (it == sizes.end()) continue;
    int cc = closure.class_of(m.complement());
    if (cc == c) {
      total += it->second / 2;
    } else {
      total += it->second - 1;
      sizes.erase(cc);
    }
    sizes.erase(it);
  }
  return total;
}

CongruenceSystem minimize_system(const CongruenceSystem& sys) {
  CongruenceSystem core = sys;
  for (std::size_t i = core.size(); i-- > 0;) {
    const auto& c = core[i];
    if (c.identity() || CongruenceClosure(core, i).congruent(c.left, c.right)) core = core.without(i);
  }
  return core;
}

TransformResult transform_to_weak_plus_selfcomp(const CongruenceSystem& sys) {
  TransformResult out;
  out.input_size = sys.size();
  CongruenceSystem weak = minimize_system(sys);
  if (weak.size() != minimum_congruence_count(sys))
    throw InvariantViolation("nonredundant core is not of minimum size");

  std::vector<PieceMask> selfcomp;
  while (auto w = weakness_violation(weak)) {
    weak = weak.without(w->chain.steps.back().congruence);
    selfcomp.push_back(w->mask);
  }
  out.m_bar = weak.size();
  out.system = weak;
  for (const auto& m : selfcomp) {
    out.self_complement_indices.push_back(out.system.size());
    out.system.add(m, m.complement());
  }
  return out;
}

bool check_transform(const CongruenceSystem& input, const TransformResult& result) {
  const auto& s = result.system;
  if (result.m_bar > s.size() || !equivalent_systems(input, s)) return false;
  if (!is_weak(s.prefix(result.m_bar))) return false;
  for (std::size_t i = result.m_bar; i < s.size(); ++i)
    if (!s[i].self_complement()) return false;
  return s.size() == minimum_congruence_count(input);
}

}  // namespace conglab
