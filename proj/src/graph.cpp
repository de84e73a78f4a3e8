#include "cgr/graph.hpp"

#include <algorithm>

namespace cgr {

ColoredGraph ColoredGraph::build(int n, std::span<const EdgeSpec> edges) {
  if (n < 0) throw usage_error("vertex count must be nonnegative");
  if (n > kMaxVertices)
    throw usage_error("graph too large: " + std::to_string(n) + " vertices (cap " +
                      std::to_string(kMaxVertices) + ")");
  ColoredGraph g;
  g.n_ = n;
  g.red_.assign(n, 0);
  g.blue_.assign(n, 0);
  for (const EdgeSpec& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw usage_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") out of range for n=" + std::to_string(n));
    if (e.u == e.v)
      throw usage_error("loop edge at vertex " + std::to_string(e.u));
    if (!e.red && !e.blue)
      throw usage_error("empty colorset on edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
    if (e.red) {
      g.red_[e.u] |= bit(e.v);
      g.red_[e.v] |= bit(e.u);
    }
    if (e.blue) {
      g.blue_[e.u] |= bit(e.v);
      g.blue_[e.v] |= bit(e.u);
    }
  }
  return g;
}

int ColoredGraph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree_any(v));
  return d;
}

int ColoredGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree_any(v);
  return twice / 2;
}

std::vector<EdgeSpec> ColoredGraph::edges() const {
  std::vector<EdgeSpec> out;
  for (int u = 0; u < n_; ++u) {
    for (Vmask m = adj_any(u) & ~full_mask(u + 1); m; m &= m - 1) {
      int v = first_vertex(m);
      out.push_back({u, v, has(u, v, Color::Red), has(u, v, Color::Blue)});
    }
  }
  return out;  // already ascending (u,v) with u < v
}

ColoredGraph ColoredGraph::with_edge(int u, int v, Color c) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw usage_error("with_edge: bad endpoints");
  ColoredGraph g = *this;
  auto& rows = (c == Color::Red) ? g.red_ : g.blue_;
  rows[u] |= bit(v);
  rows[v] |= bit(u);
  return g;
}

ColoredGraph ColoredGraph::swap_colors() const {
  ColoredGraph g = *this;
  std::swap(g.red_, g.blue_);
  return g;
}

ColoredGraph ColoredGraph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw usage_error("relabel: permutation size mismatch");
  std::vector<EdgeSpec> es = edges();
  for (EdgeSpec& e : es) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return build(n_, es);
}

SimpleGraph monochrome_view(const ColoredGraph& g, Color c) {
  SimpleGraph s(g.size());
  for (int v = 0; v < g.size(); ++v) s.adj[v] = g.adj(v, c);
  return s;
}

BipartiteView make_view(const ColoredGraph& g, Vmask xs, Vmask ys, Color c) {
  if (xs & ys) throw usage_error("bipartite view parts overlap");
  if ((xs | ys) & ~g.vertices())
    throw usage_error("bipartite view leaves the vertex range");
  return BipartiteView{&g, xs, ys, c};
}

int deficiency(const BipartiteView& view, int v) {
  if (!view.contains(v))
    throw usage_error("deficiency: vertex " + std::to_string(v) + " outside the view");
  int opposite = view.on_x(v) ? view.y_size() : view.x_size();
  return opposite - view.degree(v);
}

int max_deficiency(const BipartiteView& view) {
  int d = 0;
  for (Vmask m = view.xs | view.ys; m; m &= m - 1)
    d = std::max(d, deficiency(view, first_vertex(m)));
  return d;
}

const char* cert_fail_name(CertFail f) {
  switch (f) {
    case CertFail::None: return "ok";
    case CertFail::TooShort: return "too-short";
    case CertFail::Repeat: return "repeat";
    case CertFail::Range: return "range";
    case CertFail::Color: return "color";
    case CertFail::NotDisjoint: return "not-disjoint";
  }
  return "?";
}

namespace {

CertCheck check_sequence(const ColoredGraph& g, const std::vector<int>& vs,
                         Color c, bool cyclic, size_t min_len) {
  if (vs.size() < min_len) return {false, CertFail::TooShort, -1};
  Vmask seen = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    int v = vs[i];
    if (v < 0 || v >= g.size()) return {false, CertFail::Range, static_cast<int>(i)};
    if (seen & bit(v)) return {false, CertFail::Repeat, static_cast<int>(i)};
    seen |= bit(v);
  }
  size_t steps = cyclic ? vs.size() : vs.size() - 1;
  for (size_t i = 0; i < steps; ++i) {
    int u = vs[i], w = vs[(i + 1) % vs.size()];
    if (!g.has(u, w, c)) return {false, CertFail::Color, static_cast<int>(i)};
  }
  return {true, CertFail::None, -1};
}

}  // namespace

CertCheck verify_cycle(const ColoredGraph& g, const CycleCertificate& c) {
  return check_sequence(g, c.vertices, c.color, true, 3);
}

CertCheck verify_path(const ColoredGraph& g, const PathCertificate& p) {
  return check_sequence(g, p.vertices, p.color, false, 2);
}

CertCheck verify_matching(const ColoredGraph& g, const Matching& m) {
  Vmask seen = 0;
  for (size_t i = 0; i < m.edges.size(); ++i) {
    auto [u, v] = m.edges[i];
    if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
      return {false, CertFail::Range, static_cast<int>(i)};
    if (u == v || (seen & bit(u)) || (seen & bit(v)))
      return {false, CertFail::NotDisjoint, static_cast<int>(i)};
    seen |= bit(u) | bit(v);
    if (!g.has(u, v, m.color)) return {false, CertFail::Color, static_cast<int>(i)};
  }
  return {true, CertFail::None, -1};
}

Induced induce(const SimpleGraph& parent, Vmask verts) {
  Induced out;
  out.pos.assign(parent.n, -1);
  for (Vmask m = verts; m; m &= m - 1) {
    int v = first_vertex(m);
    out.pos[v] = static_cast<int>(out.orig.size());
    out.orig.push_back(v);
  }
  int k = static_cast<int>(out.orig.size());
  out.g = SimpleGraph(k);
  for (int i = 0; i < k; ++i) {
    for (Vmask m = parent.adj[out.orig[i]] & verts; m; m &= m - 1)
      out.g.adj[i] |= bit(out.pos[first_vertex(m)]);
  }
  return out;
}

Induced induce_view(const BipartiteView& view, Vmask xsub, Vmask ysub) {
  if (xsub & ~view.xs) throw usage_error("induce_view: xsub outside X");
  if (ysub & ~view.ys) throw usage_error("induce_view: ysub outside Y");
  Induced out;
  out.pos.assign(view.g->size(), -1);
  for (Vmask m = xsub | ysub; m; m &= m - 1) {
    int v = first_vertex(m);
    out.pos[v] = static_cast<int>(out.orig.size());
    out.orig.push_back(v);
  }
  int k = static_cast<int>(out.orig.size());
  out.g = SimpleGraph(k);
  for (int i = 0; i < k; ++i) {
    int v = out.orig[i];
    if (xsub & bit(v))
      out.xmask |= bit(i);
    else
      out.ymask |= bit(i);
    for (Vmask m = view.neighbors(v) & (xsub | ysub); m; m &= m - 1)
      out.g.adj[i] |= bit(out.pos[first_vertex(m)]);
  }
  return out;
}

}  // namespace cgr
