#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

// Vertex sets are single machine words; graphs are capped at 64 vertices.
using Vmask = std::uint64_t;

inline int popcount(Vmask m) { return std::popcount(m); }
inline int first_vertex(Vmask m) { return std::countr_zero(m); }
inline Vmask bit(int v) { return Vmask{1} << v; }
inline Vmask full_mask(int n) { return n >= 64 ? ~Vmask{0} : (Vmask{1} << n) - 1; }

// Malformed input or violated operation precondition.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Exact computation would exceed its size/budget limit; the caller gets a
// refusal, not a silently wrong answer.
struct refusal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Color : int { Red = 0, Blue = 1 };

constexpr Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline const char* color_name(Color c) { return c == Color::Red ? "Red" : "Blue"; }

struct EdgeSpec {
  int u = 0, v = 0;
  bool red = false, blue = false;
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

// Plain undirected graph as bitset adjacency rows (used for monochromatic
// views and induced subgraphs).
struct SimpleGraph {
  int n = 0;
  std::vector<Vmask> adj;

  SimpleGraph() = default;
  explicit SimpleGraph(int n_) : n(n_), adj(n_, 0) {}

  void add_edge(int u, int v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  bool has(int u, int v) const { return adj[u] & bit(v); }
  int degree(int v) const { return popcount(adj[v]); }
  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// 2-edge-colored simple graph. An edge carries a nonempty subset of
// {Red, Blue}; the dual-colored case is the intersection of the two
// adjacency relations, never a third stored relation. Immutable after
// build(); all operations are pure.
class ColoredGraph {
 public:
  static constexpr int kMaxVertices = 64;

  ColoredGraph() = default;

  // Duplicate (u,v) entries merge colorsets. Throws usage_error on loops,
  // out-of-range vertices, empty colorsets, or n > 64.
  static ColoredGraph build(int n, std::span<const EdgeSpec> edges);

  int size() const { return n_; }
  Vmask vertices() const { return full_mask(n_); }

  Vmask adj(int v, Color c) const { return rows(c)[v]; }
  Vmask adj_any(int v) const { return red_[v] | blue_[v]; }

  bool has(int u, int v, Color c) const { return rows(c)[u] & bit(v); }
  bool has_any(int u, int v) const { return adj_any(u) & bit(v); }

  int degree(int v, Color c) const { return popcount(rows(c)[v]); }
  int degree_any(int v) const { return popcount(adj_any(v)); }
  int min_degree() const;

  int edge_count() const;                // edges of the underlying graph
  std::vector<EdgeSpec> edges() const;   // ascending (u,v), u < v

  // Pure copies for property tests and hosts.
  ColoredGraph with_edge(int u, int v, Color c) const;
  ColoredGraph swap_colors() const;
  ColoredGraph relabel(std::span<const int> perm) const;  // perm[old] = new

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  const std::vector<Vmask>& rows(Color c) const {
    return c == Color::Red ? red_ : blue_;
  }
  int n_ = 0;
  std::vector<Vmask> red_, blue_;
};

SimpleGraph monochrome_view(const ColoredGraph& g, Color c);

// One color class restricted to the bipartite slice between two disjoint
// vertex sets of the parent graph. Vertex ids stay the parent's.
struct BipartiteView {
  const ColoredGraph* g = nullptr;
  Vmask xs = 0, ys = 0;
  Color color = Color::Red;

  bool contains(int v) const { return (xs | ys) & bit(v); }
  bool on_x(int v) const { return xs & bit(v); }
  Vmask neighbors(int v) const {
    return g->adj(v, color) & (on_x(v) ? ys : xs);
  }
  int degree(int v) const { return popcount(neighbors(v)); }
  int x_size() const { return popcount(xs); }
  int y_size() const { return popcount(ys); }
};

// Throws usage_error if the parts overlap or leave the graph's vertex range.
BipartiteView make_view(const ColoredGraph& g, Vmask xs, Vmask ys, Color c);

// |opposite part| - deg(v). Throws usage_error if v is outside the view.
int deficiency(const BipartiteView& view, int v);
int max_deficiency(const BipartiteView& view);

// --- certificates ------------------------------------------------------
//
// Certificates are explicit vertex data checked against the graph by code
// independent of the finders that produce them.

struct CycleCertificate {
  std::vector<int> vertices;  // distinct; consecutive (cyclically) adjacent
  Color color = Color::Red;
  int length() const { return static_cast<int>(vertices.size()); }
};

struct PathCertificate {
  std::vector<int> vertices;  // distinct; consecutive adjacent
  Color color = Color::Red;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct Matching {
  std::vector<std::pair<int, int>> edges;  // pairwise disjoint
  Color color = Color::Red;
  int size() const { return static_cast<int>(edges.size()); }
  Vmask covered() const {
    Vmask m = 0;
    for (auto [u, v] : edges) m |= bit(u) | bit(v);
    return m;
  }
};

enum class CertFail { None, TooShort, Repeat, Range, Color, NotDisjoint };
const char* cert_fail_name(CertFail f);

struct CertCheck {
  bool ok = false;
  CertFail reason = CertFail::None;
  int at = -1;  // offending position/vertex where meaningful
};

CertCheck verify_cycle(const ColoredGraph& g, const CycleCertificate& c);
CertCheck verify_path(const ColoredGraph& g, const PathCertificate& p);
CertCheck verify_matching(const ColoredGraph& g, const Matching& m);

// --- induced subgraphs with id mapping ---------------------------------

struct Induced {
  SimpleGraph g;              // compact ids 0..k-1
  std::vector<int> orig;      // compact -> parent id
  std::vector<int> pos;       // parent id -> compact (-1 if absent)
  Vmask xmask = 0, ymask = 0; // compact side masks for bipartite sources

  int to_compact(int parent_id) const { return pos[parent_id]; }
  std::vector<int> to_parent(const std::vector<int>& compact_seq) const {
    std::vector<int> out;
    out.reserve(compact_seq.size());
    for (int v : compact_seq) out.push_back(orig[v]);
    return out;
  }
};

Induced induce(const SimpleGraph& parent, Vmask verts);
Induced induce_view(const BipartiteView& view, Vmask xsub, Vmask ysub);

}  // namespace cgr
