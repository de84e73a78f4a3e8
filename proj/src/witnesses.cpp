#include "cgr/witnesses.hpp"

#include <sstream>

namespace cgr {

BipartiteView red_cross(const ColoredGraph& g, const PartitionWitness& w) {
  return make_view(g, w.U[0] | w.U[1], w.U[2] | w.U[3], Color::Red);
}

BipartiteView blue_cross(const ColoredGraph& g, const PartitionWitness& w) {
  return make_view(g, w.U[0] | w.U[2], w.U[1] | w.U[3], Color::Blue);
}

BipartiteView pair_view(const ColoredGraph& g, const PartitionWitness& w, Color c,
                        bool first_pair) {
  if (c == Color::Red)
    return first_pair ? make_view(g, w.U[0], w.U[1], Color::Red)
                      : make_view(g, w.U[2], w.U[3], Color::Red);
  return first_pair ? make_view(g, w.U[0], w.U[2], Color::Blue)
                    : make_view(g, w.U[1], w.U[3], Color::Blue);
}

std::string WitnessReport::summary() const {
  std::ostringstream os;
  for (const auto& l : lines)
    if (!l.pass)
      os << l.name << " (actual " << l.actual << ", bound " << l.bound << "); ";
  std::string s = os.str();
  return s.empty() ? "all checks pass" : s;
}

namespace {

void check(WitnessReport& rep, const std::string& name, long long actual,
           long long bound, bool pass) {
  rep.lines.push_back({name, actual, bound, pass});
  if (!pass) rep.ok = false;
}

int view_max_degree(const BipartiteView& v) {
  int d = 0;
  for (Vmask m = v.xs | v.ys; m; m &= m - 1)
    d = std::max(d, v.degree(first_vertex(m)));
  return d;
}

}  // namespace

WitnessReport verify_witness(const ColoredGraph& g, const SparseSetWitness& w) {
  WitnessReport rep;
  rep.ok = true;
  long long n = g.size();
  // structural range; the sparse-set procedure itself tightens this to 1/1000
  check(rep, "0 < delta < 1/36", w.delta.num, w.delta.den,
        w.delta.positive() && w.delta.less_than(1, 36));
  check(rep, "L inside the vertex set", popcount(w.L & ~g.vertices()), 0,
        (w.L & ~g.vertices()) == 0);
  long long lmin = delta_lower(w.delta, 2, 3, 1, n);
  check(rep, "|L| >= (2/3 - delta)n", popcount(w.L), lmin, popcount(w.L) >= lmin);
  SimpleGraph sparse = monochrome_view(g, w.sparse_color);
  Induced ind = induce(sparse, w.L);
  int maxdeg = 0;
  for (int v = 0; v < ind.g.n; ++v) maxdeg = std::max(maxdeg, ind.g.degree(v));
  long long dmax = delta_upper(w.delta, 11, n);
  check(rep, "max degree of sparse color inside L <= 11*delta*n", maxdeg, dmax,
        maxdeg <= dmax);
  return rep;
}

WitnessReport verify_witness(const ColoredGraph& g, const PartitionWitness& w) {
  WitnessReport rep;
  rep.ok = true;
  long long n = g.size();
  check(rep, "0 < delta < 1/36", w.delta.num, w.delta.den,
        w.delta.positive() && w.delta.less_than(1, 36));

  Vmask sets[6] = {w.U[0], w.U[1], w.U[2], w.U[3], w.V0, w.XR | w.XB};
  Vmask seen = 0;
  bool disjoint = true;
  for (Vmask s : sets) {
    if (seen & s) disjoint = false;
    seen |= s;
  }
  if (w.XR & w.XB) disjoint = false;
  check(rep, "U1..U4, V0, XR, XB pairwise disjoint", disjoint ? 0 : 1, 0, disjoint);
  check(rep, "partition covers V", popcount(w.everything()), n,
        w.everything() == g.vertices());

  long long umin = delta_lower(w.delta, 1, 4, 4, n);
  for (int i = 0; i < 4; ++i)
    check(rep, "|U" + std::to_string(i + 1) + "| >= (1/4 - 4*delta)n",
          popcount(w.U[i]), umin, popcount(w.U[i]) >= umin);
  long long v0max = delta_upper(w.delta, 1, n, 4);
  check(rep, "|V0| <= delta*n + 4", popcount(w.V0), v0max, popcount(w.V0) <= v0max);

  long long crossmax = delta_upper(w.delta, 1, n);
  int rdeg = view_max_degree(red_cross(g, w));
  check(rep, "max degree of R[U1+U2, U3+U4] <= delta*n", rdeg, crossmax,
        rdeg <= crossmax);
  int bdeg = view_max_degree(blue_cross(g, w));
  check(rep, "max degree of B[U1+U3, U2+U4] <= delta*n", bdeg, crossmax,
        bdeg <= crossmax);

  // per-vertex deficiency in the four intra-pair views
  long long defmax = delta_upper(w.delta, 7, n);
  const char* names[4] = {"R[U1,U2]", "R[U3,U4]", "B[U1,U3]", "B[U2,U4]"};
  int idx = 0;
  for (Color c : {Color::Red, Color::Blue}) {
    for (bool first : {true, false}) {
      BipartiteView pv = pair_view(g, w, c, first);
      int worst = 0, at = -1;
      for (Vmask m = pv.xs | pv.ys; m; m &= m - 1) {
        int v = first_vertex(m);
        int d = deficiency(pv, v);
        if (d > worst) {
          worst = d;
          at = v;
        }
      }
      check(rep,
            std::string("max deficiency in ") + names[idx] + " (vertex " +
                std::to_string(at) + ") <= 7*delta*n",
            worst, defmax, worst <= defmax);
      ++idx;
    }
  }

  for (Vmask m = w.XR; m; m &= m - 1) {
    int v = first_vertex(m);
    int d12 = popcount(g.adj(v, Color::Red) & (w.U[0] | w.U[1]));
    int d34 = popcount(g.adj(v, Color::Red) & (w.U[2] | w.U[3]));
    check(rep, "XR vertex " + std::to_string(v) + " has 3 red edges both ways",
          std::min(d12, d34), 3, d12 >= 3 && d34 >= 3);
  }
  for (Vmask m = w.XB; m; m &= m - 1) {
    int v = first_vertex(m);
    int d13 = popcount(g.adj(v, Color::Blue) & (w.U[0] | w.U[2]));
    int d24 = popcount(g.adj(v, Color::Blue) & (w.U[1] | w.U[3]));
    check(rep, "XB vertex " + std::to_string(v) + " has 3 blue edges both ways",
          std::min(d13, d24), 3, d13 >= 3 && d24 >= 3);
  }
  return rep;
}

bool structure_present(const ColoredGraph& g, const PartitionWitness& w,
                       const GlueStructure& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Vmask pair_a, pair_b;
  if (s.color == Color::Red) {
    pair_a = w.U[0] | w.U[1];
    pair_b = w.U[2] | w.U[3];
  } else {
    pair_a = w.U[0] | w.U[2];
    pair_b = w.U[1] | w.U[3];
  }
  const std::vector<int>* conns[2] = {&s.c1, &s.c2};
  Vmask used = 0;
  for (const auto* cp : conns) {
    const std::vector<int>& c = *cp;
    if (c.size() != 2 && c.size() != 3) return fail("connector must have 2 or 3 vertices");
    for (int v : c) {
      if (v < 0 || v >= g.size()) return fail("connector vertex out of range");
      if (used & bit(v)) return fail("connectors are not vertex-disjoint");
      used |= bit(v);
    }
    if (!(bit(c.front()) & pair_a))
      return fail("connector endpoint " + std::to_string(c.front()) +
                  " is not in the first pair");
    if (!(bit(c.back()) & pair_b))
      return fail("connector endpoint " + std::to_string(c.back()) +
                  " is not in the second pair");
    if (c.size() == 3 && (bit(c[1]) & w.all_parts()))
      return fail("connector interior " + std::to_string(c[1]) + " lies inside U1..U4");
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (!g.has(c[i], c[i + 1], s.color))
        return fail("connector edge (" + std::to_string(c[i]) + "," +
                    std::to_string(c[i + 1]) + ") missing in " + color_name(s.color));
  }
  return true;
}

}  // namespace cgr
