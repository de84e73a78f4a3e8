#pragma once

// Shared test helpers: deterministic instance generators and naive
// re-implementations used as independent cross-checks.

#include <algorithm>
#include <set>
#include <vector>

#include "cgr/graph.hpp"

namespace cgr::test {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t k) { return next() % k; }
  bool coin() { return next() & 1; }
  double unit() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }
};

inline ColoredGraph complete(int n, Color c) {
  std::vector<EdgeSpec> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      es.push_back({u, v, c == Color::Red, c == Color::Blue});
  return ColoredGraph::build(n, es);
}

inline ColoredGraph complete_bipartite(int a, int b, Color c) {
  std::vector<EdgeSpec> es;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      es.push_back({u, v, c == Color::Red, c == Color::Blue});
  return ColoredGraph::build(a + b, es);
}

// every pair gets an edge with probability edge_p; colored red/blue evenly,
// dual with probability dual_share
inline ColoredGraph random_colored(int n, Rng& rng, double dual_share = 0.0,
                                   double edge_p = 0.6) {
  std::vector<EdgeSpec> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() >= edge_p) continue;
      if (rng.unit() < dual_share) {
        es.push_back({u, v, true, true});
      } else {
        bool red = rng.coin();
        es.push_back({u, v, red, !red});
      }
    }
  return ColoredGraph::build(n, es);
}

// simple graph with independent edge probability
inline SimpleGraph random_simple(int n, Rng& rng, double edge_p) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < edge_p) g.add_edge(u, v);
  return g;
}

inline bool naive_cycle_check(const ColoredGraph& g, const std::vector<int>& vs,
                              Color c) {
  if (vs.size() < 3) return false;
  std::set<int> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size()) return false;
  for (int v : vs)
    if (v < 0 || v >= g.size()) return false;
  auto edges = g.edges();
  auto has_edge = [&](int a, int b) {
    for (const EdgeSpec& e : edges) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
        return c == Color::Red ? e.red : e.blue;
    }
    return false;
  };
  for (size_t i = 0; i < vs.size(); ++i)
    if (!has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

// exhaustive maximum matching by branching on the lowest uncovered vertex
inline int slow_max_matching(const SimpleGraph& g, Vmask allowed) {
  int lowest = -1;
  for (Vmask m = allowed; m; m &= m - 1) {
    int v = first_vertex(m);
    if (g.adj[v] & allowed & ~bit(v)) {
      lowest = v;
      break;
    }
  }
  if (lowest < 0) return 0;
  // skip it
  int best = slow_max_matching(g, allowed & ~bit(lowest));
  // or match it
  for (Vmask m = g.adj[lowest] & allowed; m; m &= m - 1) {
    int w = first_vertex(m);
    best = std::max(best,
                    1 + slow_max_matching(g, allowed & ~bit(lowest) & ~bit(w)));
  }
  return best;
}

// existence of a simple cycle of exactly len: memo-free DFS over all roots
inline bool slow_has_cycle(const SimpleGraph& g, int len, int root, int cur,
                           Vmask visited, int depth) {
  if (depth == len) return g.adj[cur] & bit(root);
  for (Vmask m = g.adj[cur] & ~visited & ~full_mask(root); m; m &= m - 1) {
    int w = first_vertex(m);
    if (slow_has_cycle(g, len, root, w, visited | bit(w), depth + 1)) return true;
  }
  return false;
}

inline bool slow_has_cycle(const SimpleGraph& g, int len) {
  if (len < 3 || len > g.n) return false;
  for (int root = 0; root < g.n; ++root)
    if (slow_has_cycle(g, len, root, root, bit(root), 1)) return true;
  return false;
}

// existence of a hamiltonian path between fixed endpoints (plain DFS, small n)
inline bool slow_ham_path(const SimpleGraph& g, int from, int to, Vmask visited,
                          int count) {
  if (count == g.n) return from == to;
  for (Vmask m = g.adj[from] & ~visited; m; m &= m - 1) {
    int w = first_vertex(m);
    if (w == to && count + 1 < g.n) continue;
    if (slow_ham_path(g, w, to, visited | bit(w), count + 1)) return true;
  }
  return false;
}

inline bool slow_ham_path(const SimpleGraph& g, int from, int to) {
  if (g.n == 0 || from == to) return false;
  return slow_ham_path(g, from, to, bit(from), 1);
}

}  // namespace cgr::test
