#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "conglab/budget.hpp"
#include "conglab/errors.hpp"
#include "conglab/graph.hpp"

namespace conglab {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Tarjan, iterative.
std::vector<std::size_t> strongly_connected(const CongruenceDigraph& g) {
  const std::size_t n = g.vertex_count(), none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none), stack;
  std::vector<char> on_stack(n, 0);
  std::size_t counter = 0, comps = 0;
  struct Frame {
    std::size_t v, next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.out(f.v);
      if (f.next < out.size()) {
        std::size_t w = g.id_of(g.edge(out[f.next++]).to);
        if (index[w] == none) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return comp;
}

// Shortest edge path from a to b, or empty when a == b.
std::vector<std::size_t> directed_path(const CongruenceDigraph& g, std::size_t a, std::size_t b) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(g.vertex_count(), none);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<std::size_t> q{a};
  seen[a] = 1;
  while (!q.empty() && !seen[b]) {
    std::size_t v = q.front();
    q.pop_front();
    for (std::size_t e : g.out(v)) {
      std::size_t w = g.id_of(g.edge(e).to);
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = e;
      q.push_back(w);
    }
  }
  std::vector<std::size_t> path;
  if (!seen[b]) return path;
  for (std::size_t v = b; v != a;) {
    path.push_back(via[v]);
    v = g.id_of(g.edge(via[v]).from);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Last-label automaton for check_claim3. Code 0: no previous edge; otherwise
// 1 + 4i + k with k the inverse flag for sigma edges or run length - 1 for
// tau edges.
struct LabelAutomaton {
  std::size_t codes;
  explicit LabelAutomaton(std::size_t m) : codes(1 + 4 * m) {}
  std::optional<std::size_t> next(std::size_t code, const DigraphEdge& e) const {
    const std::size_t i = e.congruence;
    const bool same = code != 0 && (code - 1) / 4 == i;
    const std::size_t k = code == 0 ? 0 : (code - 1) % 4;
    if (e.tau) {
      std::size_t run = same ? k + 1 : 0;
      if (run >= 3) return std::nullopt;
      return 1 + 4 * i + run;
    }
    if (same && k != static_cast<std::size_t>(e.inverse)) return std::nullopt;
    return 1 + 4 * i + (e.inverse ? 1 : 0);
  }
};

}  // namespace

UndirectedQuotient build_quotient(const CongruenceDigraph& g) {
  UndirectedQuotient q;
  std::map<std::tuple<std::size_t, bool, bool>, std::size_t> good;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& d = g.edge(e);
    if (d.good) good[{d.congruence, d.complemented, d.inverse}] = e;
  }
  const auto& sys = g.system();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    bool tau = g.variant() == Variant::Section4 && i >= g.m_bar();
    for (bool comp : {false, true}) {
      if (tau && comp) break;
      UndirectedEdge u;
      u.congruence = i;
      u.complemented = comp;
      u.self_complement = tau;
      u.forward = good.at({i, comp, false});
      u.backward = tau ? good.at({i, true, false}) : good.at({i, comp, true});
      u.a = g.edge(u.forward).from;
      u.b = g.edge(u.forward).to;
      q.edges.push_back(u);
    }
  }
  UnionFind uf(g.vertex_count());
  for (const auto& u : q.edges) uf.unite(g.id_of(u.a), g.id_of(u.b));
  q.component.resize(g.vertex_count());
  std::map<std::size_t, std::size_t> label;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = label.emplace(uf.find(v), label.size());
    q.component[v] = it->second;
  }
  q.component_count = label.size();
  return q;
}

Claim1Result check_claim1(const CongruenceDigraph& g) {
  Claim1Result res;
  auto comp = strongly_connected(g);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& d = g.edge(e);
    if (d.good) continue;
    std::size_t u = g.id_of(d.from), v = g.id_of(d.to);
    if (comp[u] != comp[v]) continue;
    res.holds = false;
    res.cycle.push_back(e);
    auto back = directed_path(g, v, u);
    res.cycle.insert(res.cycle.end(), back.begin(), back.end());
    return res;
  }
  return res;
}

Claim2Result check_claim2(const CongruenceDigraph& g) { return check_claim2(g, build_quotient(g)); }

Claim2Result check_claim2(const CongruenceDigraph& g, const UndirectedQuotient& q) {
  Claim2Result res;
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, undirected edge)
  for (std::size_t k = 0; k < q.edges.size(); ++k) {
    std::size_t a = g.id_of(q.edges[k].a), b = g.id_of(q.edges[k].b);
    if (uf.unite(a, b)) {
      adj[a].emplace_back(b, k);
      adj[b].emplace_back(a, k);
      continue;
    }
    res.holds = false;
    // close the cycle through the forest built so far
    std::vector<std::size_t> via(n, static_cast<std::size_t>(-1)), prev(n, 0);
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> bfs{b};
    seen[b] = 1;
    while (!bfs.empty() && !seen[a]) {
      std::size_t x = bfs.front();
      bfs.pop_front();
      for (auto [y, edge] : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          via[y] = edge;
          prev[y] = x;
          bfs.push_back(y);
        }
    }
    res.cycle.push_back(k);
    for (std::size_t x = a; x != b; x = prev[x]) res.cycle.push_back(via[x]);
    res.component = q.component[a];
    return res;
  }
  if (g.variant() == Variant::Section4) {
    std::map<std::size_t, std::size_t> first;
    for (std::size_t k = 0; k < q.edges.size(); ++k) {
      if (!q.edges[k].self_complement) continue;
      std::size_t c = q.component[g.id_of(q.edges[k].a)];
      auto [it, fresh] = first.emplace(c, k);
      if (fresh) continue;
      res.holds = false;
      res.self_complement_edges = {it->second, k};
      res.component = c;
      return res;
    }
  }
  return res;
}

std::size_t default_claim3_bound(const CongruenceDigraph& g) {
  int exp = g.pieces() + (g.variant() == Variant::Section4 ? 1 : 0);
  return std::size_t{1} << exp;
}

Claim3Result check_claim3(const CongruenceDigraph& g, std::size_t bound, std::size_t budget) {
  Claim3Result res;
  res.bound = bound == 0 ? default_claim3_bound(g) : bound;
  if (budget == 0) budget = state_budget();
  const LabelAutomaton aut(g.system().size());
  const std::size_t codes = aut.codes, total = g.vertex_count() * codes;
  if (total > budget) throw BudgetExceeded("claim 3 product automaton has " + std::to_string(total) + " states", 0);

  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::uint8_t> color(total, 0);
  std::vector<std::size_t> longest(total, 0), best(total, none);
  struct Frame {
    std::size_t state, next, via;  // via: edge used to enter
  };
  std::vector<Frame> call;
  auto successor = [&](std::size_t state, std::size_t e) -> std::optional<std::size_t> {
    auto c = aut.next(state % codes, g.edge(e));
    if (!c) return std::nullopt;
    return g.id_of(g.edge(e).to) * codes + *c;
  };

  for (std::size_t v = 0; v < g.vertex_count() && res.holds; ++v) {
    std::size_t root = v * codes;
    if (color[root]) continue;
    call.push_back({root, 0, none});
    color[root] = 1;
    ++res.states;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.out(f.state / codes);
      if (f.next < out.size()) {
        std::size_t e = out[f.next++];
        auto t = successor(f.state, e);
        if (!t) continue;
        if (color[*t] == 0) {
          color[*t] = 1;
          ++res.states;
          call.push_back({*t, 0, e});
        } else if (color[*t] == 1) {
          // a cycle: walk from the root to *t, then loop
          res.holds = false;
          res.unbounded = true;
          std::vector<std::size_t> prefix, loop;
          std::size_t at = 0;
          while (call[at].state != *t) ++at;
          for (std::size_t k = 1; k <= at; ++k) prefix.push_back(call[k].via);
          for (std::size_t k = at + 1; k < call.size(); ++k) loop.push_back(call[k].via);
          loop.push_back(e);
          res.path = prefix;
          while (res.path.size() < res.bound) res.path.push_back(loop[(res.path.size() - prefix.size()) % loop.size()]);
          res.path.resize(res.bound);
          call.clear();
          break;
        } else if (1 + longest[*t] > longest[f.state]) {
          longest[f.state] = 1 + longest[*t];
          best[f.state] = e;
        }
        continue;
      }
      std::size_t s = f.state, via = f.via;
      color[s] = 2;
      call.pop_back();
      if (!call.empty() && 1 + longest[s] > longest[call.back().state]) {
        longest[call.back().state] = 1 + longest[s];
        best[call.back().state] = via;
      }
    }
  }
  if (res.unbounded) return res;

  std::size_t start = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (longest[v * codes] > longest[start]) start = v * codes;
  res.longest = g.vertex_count() ? longest[start] : 0;
  if (res.longest >= res.bound) {
    res.holds = false;
    for (std::size_t s = start; res.path.size() < res.bound;) {
      res.path.push_back(best[s]);
      s = *successor(s, best[s]);
    }
  }
  return res;
}

bool is_free_walk(const CongruenceDigraph& g, std::span<const std::size_t> path) {
  const LabelAutomaton aut(g.system().size());
  std::size_t code = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] >= g.edges().size()) return false;
    const auto& e = g.edge(path[k]);
    if (k > 0 && g.edge(path[k - 1]).to != e.from) return false;
    auto c = aut.next(code, e);
    if (!c) return false;
    code = *c;
  }
  return true;
}

}  // namespace conglab
