#include "cgr/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace cgr {

namespace {

// Scratch color matrix: 0 absent, 1 red, 2 blue, 3 both. Plantings replace
// the base color rather than stacking a second one.
struct Canvas {
  int n;
  std::vector<std::uint8_t> m;
  explicit Canvas(int n_) : n(n_), m(n_ * n_, 0) {}
  void set(int u, int v, std::uint8_t code) {
    m[u * n + v] = code;
    m[v * n + u] = code;
  }
  std::uint8_t at(int u, int v) const { return m[u * n + v]; }
  ColoredGraph graph() const {
    std::vector<EdgeSpec> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (at(u, v))
          es.push_back({u, v, (at(u, v) & 1) != 0, (at(u, v) & 2) != 0});
    return ColoredGraph::build(n, es);
  }
};

Vmask range_mask(int lo, int hi) {  // [lo, hi)
  return full_mask(hi) & ~full_mask(lo);
}

void color_across(Canvas& c, Vmask a, Vmask b, std::uint8_t code) {
  for (Vmask x = a; x; x &= x - 1)
    for (Vmask y = b; y; y &= y - 1) c.set(first_vertex(x), first_vertex(y), code);
}

void color_inside(Canvas& c, Vmask a, std::uint8_t code) {
  for (Vmask x = a; x; x &= x - 1)
    for (Vmask y = x & (x - 1); y; y &= y - 1)
      c.set(first_vertex(x), first_vertex(y), code);
}

int nth_vertex(Vmask m, int k) {
  while (k--) m &= m - 1;
  return first_vertex(m);
}

}  // namespace

GenResult example1(int t, int r) {
  if (t < 1) throw usage_error("example1: t must be >= 1");
  if (r < 0 || r > 2) throw usage_error("example1: r must be in {0,1,2}");
  int n = 3 * t + r;
  if (n > ColoredGraph::kMaxVertices) throw usage_error("example1: too large");
  Canvas c(n);
  Vmask u1 = range_mask(0, 2 * t + r), u2 = range_mask(2 * t + r, n);
  color_inside(c, u1, 2);
  color_inside(c, u2, 2);
  color_across(c, u1, u2, 1);
  GenResult out{c.graph(), {}};
  out.expect.min_degree = n - 1;
  out.expect.circumference = 2 * t + r;
  out.expect.verdict_branch = "AllLengths(Blue)";
  return out;
}

GenResult example2(int n, std::uint64_t seed, IntraColoring intra) {
  if (n < 8) throw usage_error("example2: n must be >= 8");
  if (n > ColoredGraph::kMaxVertices) throw usage_error("example2: too large");
  int base = (n - 2) / 4, rem = (n - 2) % 4;
  int sizes[4];
  for (int i = 0; i < 4; ++i) sizes[i] = base + (i >= 4 - rem ? 1 : 0);
  Vmask u[4];
  int at = 0;
  for (int i = 0; i < 4; ++i) {
    u[i] = range_mask(at, at + sizes[i]);
    at += sizes[i];
  }
  int x = n - 2, y = n - 1;

  Canvas c(n);
  color_across(c, u[0], u[1], 2);
  color_across(c, u[2], u[3], 2);
  color_across(c, u[0], u[2], 1);
  color_across(c, u[1], u[3], 1);
  // U1-U4 and U2-U3 stay deleted.
  Rng rng(seed);
  for (int i = 0; i < 4; ++i) {
    for (Vmask a = u[i]; a; a &= a - 1)
      for (Vmask b = a & (a - 1); b; b &= b - 1) {
        std::uint8_t code = intra == IntraColoring::AllRed    ? 1
                            : intra == IntraColoring::AllBlue ? 2
                            : rng.coin()                      ? 1
                                                              : 2;
        c.set(first_vertex(a), first_vertex(b), code);
      }
  }
  for (int v = 0; v < n; ++v) {
    if (v != x) c.set(x, v, 1);
    if (v != y && v != x) c.set(y, v, 2);
  }
  c.set(x, y, 1);

  GenResult out{c.graph(), {}};
  out.expect.min_degree = (3 * n - 2) / 4;
  out.expect.circumference_max = 2 * ((n - 2 + 3) / 4) + 1;
  return out;
}

GenResult example3(int t) {
  if (t < 2) throw usage_error("example3: t must be >= 2");
  int n = 3 * t + 1;
  if (n > ColoredGraph::kMaxVertices) throw usage_error("example3: too large");
  Canvas c(n);
  Vmask u1 = range_mask(0, n / 2), u2 = range_mask(n / 2, n);
  color_inside(c, u1, 2);
  color_inside(c, u2, 2);
  color_across(c, u1, u2, 1);
  GenResult out{c.graph(), {}};
  out.expect.min_degree = n - 1;
  out.expect.absent_length = 2 * t + 1;
  std::set<int> reds;
  for (int len = 4; len <= 2 * (n / 2); len += 2) reds.insert(len);
  out.expect.red_lengths = reds;
  out.expect.circumference = 2 * (n / 2);
  return out;
}

GenResult k4_two_paths() {
  // two Hamiltonian paths of K4: red 0-1-2-3, blue 1-3-0-2
  std::vector<EdgeSpec> es = {
      {0, 1, true, false}, {1, 2, true, false}, {2, 3, true, false},
      {1, 3, false, true}, {0, 3, false, true}, {0, 2, false, true},
  };
  GenResult out{ColoredGraph::build(4, es), {}};
  out.expect.no_mono_cycles = true;
  return out;
}

GenResult k5_two_bulls() {
  // red bull: path 0-1-2-3-4 plus the chord 1-3 (second-fourth);
  // blue bull is the complement, path 1-4-2-0-3 plus the chord 4-0
  std::vector<EdgeSpec> es = {
      {0, 1, true, false},  {1, 2, true, false},  {2, 3, true, false},
      {3, 4, true, false},  {1, 3, true, false},  {0, 2, false, true},
      {0, 3, false, true},  {0, 4, false, true},  {1, 4, false, true},
      {2, 4, false, true},
  };
  GenResult out{ColoredGraph::build(5, es), {}};
  out.expect.circumference = 3;
  out.expect.red_lengths = std::set<int>{3};
  out.expect.blue_lengths = std::set<int>{3};
  return out;
}

GenResult random_min_degree(int n, std::uint64_t seed) {
  if (n < 4) throw usage_error("random_min_degree: n must be >= 4");
  if (n > ColoredGraph::kMaxVertices) throw usage_error("random_min_degree: too large");
  int floor_deg = static_cast<int>(ceil_div(3LL * n - 1, 4));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  Rng rng(seed);
  for (size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[rng.below(i)]);
  std::vector<int> deg(n, n - 1);
  std::vector<std::pair<int, int>> kept;
  for (auto [u, v] : edges) {
    if (deg[u] > floor_deg && deg[v] > floor_deg) {
      --deg[u];
      --deg[v];
    } else {
      kept.push_back({u, v});
    }
  }
  std::sort(kept.begin(), kept.end());
  std::vector<EdgeSpec> es;
  for (auto [u, v] : kept) {
    bool red = rng.coin();
    es.push_back({u, v, red, !red});
  }
  return GenResult{ColoredGraph::build(n, es), {}};
}

FourPartResult four_part_instance(int n, FourPartPlanting planting, std::uint64_t seed,
                                  Delta delta) {
  if (n < 16) throw usage_error("four_part_instance: n must be >= 16");
  if (n > ColoredGraph::kMaxVertices) throw usage_error("four_part_instance: too large");
  int v0 = ((n - 1) % 4) + 1;
  int u = (n - v0) / 4;
  bool needs_outside =
      planting.kind == FourPartPlanting::Case3 || planting.kind == FourPartPlanting::InsideEdge;
  if (needs_outside && v0 < 2)
    throw usage_error("four_part_instance: planting needs 2 outside vertices, n leaves " +
                      std::to_string(v0));

  PartitionWitness w;
  w.delta = delta;
  for (int i = 0; i < 4; ++i) w.U[i] = range_mask(i * u, (i + 1) * u);
  w.V0 = range_mask(4 * u, n);

  // pair coloring: (U1,U2) and (U3,U4) red, (U1,U3) and (U2,U4) blue,
  // (U1,U4) and (U2,U3) deleted, intra blue
  auto pair_code = [](int a, int b) -> std::uint8_t {
    if (a == b) return 2;
    if (a > b) std::swap(a, b);
    if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 1;
    if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 2;
    return 0;
  };

  // outside vertices carry part-like profiles, order shuffled by seed
  std::vector<int> profile(n, -1);
  for (int i = 0; i < 4; ++i)
    for (Vmask m = w.U[i]; m; m &= m - 1) profile[first_vertex(m)] = i;
  std::vector<int> v0_profiles(v0);
  std::iota(v0_profiles.begin(), v0_profiles.end(), 0);
  for (auto& p : v0_profiles) p %= 4;
  Rng rng(seed);
  for (size_t i = v0_profiles.size(); i > 1; --i)
    std::swap(v0_profiles[i - 1], v0_profiles[rng.below(i)]);
  for (int i = 0; i < v0; ++i) profile[4 * u + i] = v0_profiles[i];

  Canvas c(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) c.set(a, b, pair_code(profile[a], profile[b]));

  FourPartResult out;
  auto pick = [&](int part, int k) { return nth_vertex(w.U[part], k); };

  switch (planting.kind) {
    case FourPartPlanting::None:
      break;
    case FourPartPlanting::Case1: {
      int x1 = pick(0, 0), y1 = pick(2, 0), x2 = pick(1, 0), y2 = pick(3, 0);
      c.set(x1, y1, 1);
      c.set(x2, y2, 1);
      out.structure = GlueStructure{Color::Red, {x1, y1}, {x2, y2}, "two-edges"};
      break;
    }
    case FourPartPlanting::Case2: {
      int a1 = pick(0, 0), b1 = pick(2, 0), a2 = pick(0, 1), b2 = pick(2, 1);
      c.set(a1, b1, 1);
      c.set(a2, b2, 1);
      out.structure = GlueStructure{Color::Red, {a1, b1}, {a2, b2}, "matching2"};
      break;
    }
    case FourPartPlanting::Case3: {
      int w1 = 4 * u, w2 = 4 * u + 1;
      int a1 = pick(0, 0), b1 = pick(2, 0), a2 = pick(0, 1), b2 = pick(2, 1);
      c.set(a1, w1, 1);
      c.set(w1, b1, 1);
      c.set(a2, w2, 1);
      c.set(w2, b2, 1);
      out.structure = GlueStructure{Color::Red, {a1, w1, b1}, {a2, w2, b2}, "two-paths"};
      break;
    }
    case FourPartPlanting::Case4: {
      int x1 = pick(0, 0), y1 = pick(1, 0), x2 = pick(2, 0), y2 = pick(3, 0);
      c.set(x1, y1, 2);
      c.set(x2, y2, 2);
      out.structure = GlueStructure{Color::Blue, {x1, y1}, {x2, y2}, "two-edges"};
      break;
    }
    case FourPartPlanting::InsideEdge: {
      c.set(pick(1, 0), pick(1, 1), 1);  // red edge inside U2
      // the typed vertices carry exactly their red attachments, so they
      // bridge nothing in blue and the detour is the only long route
      int w1 = 4 * u, w2 = 4 * u + 1;
      for (int k = 0; k < n; ++k) {
        if (k != w1) c.set(w1, k, 0);
        if (k != w2 && k != w1) c.set(w2, k, 0);
      }
      for (int k = 0; k < 3; ++k) {
        c.set(w1, pick(0, k), 1);  // type (1,3)
        c.set(w1, pick(2, k), 1);
        c.set(w2, pick(0, k), 1);  // type (1,4)
        c.set(w2, pick(3, k), 1);
      }
      break;
    }
  }

  out.g = c.graph();
  out.witness = w;
  return out;
}

SparseCaseResult sparse_set_instance(int n, int target_case, std::uint64_t seed,
                                     Delta delta) {
  if (n < 9) throw usage_error("sparse_set_instance: n must be >= 9");
  if (n > ColoredGraph::kMaxVertices) throw usage_error("sparse_set_instance: too large");
  if (target_case != 1 && target_case != 2)
    throw usage_error("sparse_set_instance: case must be 1 or 2");
  int t = n / 3, r = n % 3;
  (void)seed;

  Canvas c(n);
  int lsz;
  if (target_case == 1) {
    lsz = 2 * t + r - 1;
  } else {
    lsz = static_cast<int>(delta_lower(delta, 2, 3, 1, n));  // floor((2/3 - d)n)
  }
  Vmask L = range_mask(0, lsz);
  Vmask outside = range_mask(lsz, n);
  color_inside(c, L, 2);        // blue-complete inside L, so R[L] is empty
  color_across(c, L, outside, 1);
  color_inside(c, outside, 1);

  if (target_case == 1) {
    // one vertex outside gets enough blue edges into L to qualify for L'
    int wv = lsz;
    long long b = delta_upper(delta, 1, n, 3);  // >= delta*n + 2 with room
    for (int k = 0; k < std::min<long long>(b, lsz); ++k) c.set(wv, k, 2);
  }

  SparseCaseResult out;
  out.g = c.graph();
  out.witness = SparseSetWitness{L, Color::Red, delta};
  return out;
}

Instance generate(const InstanceSpec& spec) {
  Instance out;
  switch (spec.family) {
    case InstanceSpec::Example1: {
      GenResult r = example1(spec.t, spec.r);
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::Example2: {
      GenResult r = example2(spec.n, spec.seed, spec.intra);
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::Example3: {
      GenResult r = example3(spec.t);
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::K4Paths: {
      GenResult r = k4_two_paths();
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::K5Bulls: {
      GenResult r = k5_two_bulls();
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::RandomMinDeg: {
      GenResult r = random_min_degree(spec.n, spec.seed);
      out.g = r.g;
      out.expect = r.expect;
      break;
    }
    case InstanceSpec::SparseSetCase: {
      SparseCaseResult r = sparse_set_instance(spec.n, spec.sparse_case, spec.seed,
                                               spec.delta);
      out.g = r.g;
      out.sparse = r.witness;
      break;
    }
    case InstanceSpec::FourPartCase: {
      FourPartResult r = four_part_instance(spec.n, spec.planting, spec.seed,
                                            spec.delta);
      out.g = r.g;
      out.expect = r.expect;
      out.partition = r.witness;
      out.structure = r.structure;
      break;
    }
  }
  return out;
}

const char* family_name(InstanceSpec::Family f) {
  switch (f) {
    case InstanceSpec::Example1: return "example1";
    case InstanceSpec::Example2: return "example2";
    case InstanceSpec::Example3: return "example3";
    case InstanceSpec::K4Paths: return "k4paths";
    case InstanceSpec::K5Bulls: return "k5bulls";
    case InstanceSpec::RandomMinDeg: return "random";
    case InstanceSpec::SparseSetCase: return "sparse";
    case InstanceSpec::FourPartCase: return "fourpart";
  }
  return "?";
}

std::optional<InstanceSpec::Family> family_from_name(const std::string& s) {
  for (auto f : {InstanceSpec::Example1, InstanceSpec::Example2, InstanceSpec::Example3,
                 InstanceSpec::K4Paths, InstanceSpec::K5Bulls,
                 InstanceSpec::RandomMinDeg, InstanceSpec::SparseSetCase,
                 InstanceSpec::FourPartCase}) {
    if (s == family_name(f)) return f;
  }
  return std::nullopt;
}

}  // namespace cgr
