#include "cgr/spectrum.hpp"

#include <algorithm>
#include <thread>

namespace cgr {

namespace {

// Backtracking DFS over simple paths rooted at the cycle's minimum vertex,
// with bitset pruning: available-count and reachability of the root through
// the remaining vertices.
struct CycleSearch {
  const SimpleGraph& g;
  int target;
  int start = 0;
  Vmask allowed = 0;  // candidate vertices, all > start
  Vmask visited = 0;
  std::vector<int> path;

  bool dfs(int u) {
    if (static_cast<int>(path.size()) == target) return g.adj[u] & bit(start);
    Vmask avail = allowed & ~visited;
    int need = target - static_cast<int>(path.size());
    if (popcount(avail) < need) return false;
    Vmask domain = avail | bit(start);
    Vmask reach = bit(u), frontier = bit(u);
    while (frontier) {
      Vmask next = 0;
      for (Vmask m = frontier; m; m &= m - 1) next |= g.adj[first_vertex(m)];
      next &= domain & ~reach;
      reach |= next;
      frontier = next;
    }
    if (!(reach & bit(start))) return false;
    if (popcount(reach & avail) < need) return false;
    for (Vmask m = g.adj[u] & avail; m; m &= m - 1) {
      int w = first_vertex(m);
      path.push_back(w);
      visited |= bit(w);
      if (dfs(w)) return true;
      path.pop_back();
      visited &= ~bit(w);
    }
    return false;
  }
};

// A chord of a longer witness can cut it down to the target length.
std::vector<int> chord_shortcut(const std::vector<int>& cyc, const SimpleGraph& g,
                                int target) {
  int L = static_cast<int>(cyc.size());
  for (int i = 0; i < L; ++i) {
    for (int j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;  // cycle edge, not a chord
      if (!g.has(cyc[i], cyc[j])) continue;
      if (j - i + 1 == target)
        return std::vector<int>(cyc.begin() + i, cyc.begin() + j + 1);
      if (L - (j - i) + 1 == target) {
        std::vector<int> out(cyc.begin(), cyc.begin() + i + 1);
        out.insert(out.end(), cyc.begin() + j, cyc.end());
        return out;
      }
    }
  }
  return {};
}

void check_exact_size(const ColoredGraph& g, const SpectrumOptions& opts) {
  if (g.size() > opts.max_n_exact)
    throw refusal_error("exact search refused: n=" + std::to_string(g.size()) +
                        " exceeds threshold " + std::to_string(opts.max_n_exact) +
                        " (raise --max-n or use the cycle finders)");
}

ColorSpectrum spectrum_of_view(const SimpleGraph& view, Color c, int jobs) {
  ColorSpectrum out;
  int n = view.n;
  if (jobs <= 1) {
    std::vector<std::vector<int>> found;
    for (int len = n; len >= 3; --len) {
      std::vector<int> cyc;
      for (const auto& longer : found) {
        cyc = chord_shortcut(longer, view, len);
        if (!cyc.empty()) break;
      }
      if (cyc.empty()) cyc = find_cycle_of_length(view, len);
      if (!cyc.empty()) {
        found.push_back(cyc);
        out.lengths.insert(len);
        out.witness[len] = CycleCertificate{cyc, c};
      }
    }
    return out;
  }
  // Parallel mode: per-length searches are independent; results merge in
  // canonical order. No chord seeding so each length's witness does not
  // depend on scheduling.
  int count = std::max(0, n - 2);
  std::vector<std::vector<int>> results(count);
  std::vector<std::thread> workers;
  int w = std::min(jobs, std::max(1, count));
  for (int id = 0; id < w; ++id) {
    workers.emplace_back([&, id] {
      for (int k = id; k < count; k += w)
        results[k] = find_cycle_of_length(view, k + 3);
    });
  }
  for (auto& th : workers) th.join();
  for (int k = 0; k < count; ++k) {
    if (!results[k].empty()) {
      out.lengths.insert(k + 3);
      out.witness[k + 3] = CycleCertificate{results[k], c};
    }
  }
  return out;
}

}  // namespace

std::vector<int> find_cycle_of_length(const SimpleGraph& g, int len) {
  if (len < 3 || len > g.n) return {};
  for (int s = 0; s < g.n; ++s) {
    CycleSearch cs{g, len, 0, 0, 0, {}};
    cs.start = s;
    cs.allowed = ~full_mask(s + 1) & full_mask(g.n);
    if (popcount(g.adj[s] & cs.allowed) < 2) continue;
    cs.path = {s};
    cs.visited = bit(s);
    if (cs.dfs(s)) return cs.path;
  }
  return {};
}

ColorSpectrum cycle_spectrum(const ColoredGraph& g, Color c, const SpectrumOptions& opts) {
  check_exact_size(g, opts);
  ColorSpectrum out = spectrum_of_view(monochrome_view(g, c), c, opts.jobs);
  for (const auto& [len, cert] : out.witness) {
    CertCheck chk = verify_cycle(g, cert);
    if (!chk.ok || cert.length() != len)
      throw std::logic_error("spectrum witness failed independent verification");
  }
  return out;
}

SpectrumReport spectrum_report(const ColoredGraph& g, const SpectrumOptions& opts) {
  SpectrumReport rep;
  rep.n = g.size();
  rep.red = cycle_spectrum(g, Color::Red, opts);
  rep.blue = cycle_spectrum(g, Color::Blue, opts);
  rep.exact = true;
  int best_red = rep.red.lengths.empty() ? 0 : *rep.red.lengths.rbegin();
  int best_blue = rep.blue.lengths.empty() ? 0 : *rep.blue.lengths.rbegin();
  if (best_blue >= best_red && best_blue > 0)
    rep.circumference = Circumference{best_blue, Color::Blue, rep.blue.witness.at(best_blue)};
  else if (best_red > 0)
    rep.circumference = Circumference{best_red, Color::Red, rep.red.witness.at(best_red)};
  return rep;
}

std::optional<Circumference> monochromatic_circumference(const ColoredGraph& g,
                                                         const SpectrumOptions& opts) {
  return spectrum_report(g, opts).circumference;
}

TheoremVerdict verdict_from_report(const SpectrumReport& rep) {
  if (rep.n < 3) throw usage_error("verdict needs n >= 3");
  TheoremVerdict v;
  v.n = rep.n;
  v.t = rep.n / 3;
  v.r = rep.n % 3;

  auto missing_of = [&](BranchKind k, Color c) {
    std::set<int> want;
    if (k == BranchKind::AllLengths) {
      for (int len = 3; len <= 2 * v.t + v.r; ++len) want.insert(len);
    } else {
      for (int len = 4; len <= 2 * v.t + 2; len += 2) want.insert(len);
    }
    std::set<int> missing;
    for (int len : want)
      if (!rep.of(c).lengths.count(len)) missing.insert(len);
    return missing;
  };

  struct Cand {
    BranchKind kind;
    Color color;
  };
  const Cand order[] = {{BranchKind::AllLengths, Color::Red},
                        {BranchKind::AllLengths, Color::Blue},
                        {BranchKind::AllEven, Color::Red},
                        {BranchKind::AllEven, Color::Blue}};
  std::set<int> best;
  bool have_best = false;
  Cand best_cand = order[0];
  for (const Cand& cand : order) {
    std::set<int> miss = missing_of(cand.kind, cand.color);
    if (miss.empty()) {
      v.holds = true;
      v.branch = cand.kind;
      v.branch_color = cand.color;
      v.missing.clear();
      return v;
    }
    if (!have_best || miss.size() < best.size()) {
      best = miss;
      best_cand = cand;
      have_best = true;
    }
  }
  v.holds = false;
  v.branch = BranchKind::Neither;
  v.branch_color = best_cand.color;
  v.missing = best;
  return v;
}

TheoremVerdict theorem_verdict(const ColoredGraph& g, const SpectrumOptions& opts) {
  return verdict_from_report(spectrum_report(g, opts));
}

std::string branch_string(const TheoremVerdict& v) {
  if (v.branch == BranchKind::Neither) return "Neither";
  std::string s = (v.branch == BranchKind::AllLengths) ? "AllLengths" : "AllEven";
  return s + "(" + color_name(v.branch_color) + ")";
}

namespace {

// Every cycle of the given length in the host, as a mask over edge indices.
void all_cycle_edge_masks(const SimpleGraph& g,
                          const std::vector<std::vector<int>>& eidx, int len,
                          std::vector<std::uint32_t>& out) {
  struct Enum {
    const SimpleGraph& g;
    const std::vector<std::vector<int>>& eidx;
    int target, start;
    Vmask allowed, visited;
    std::vector<int> path;
    std::vector<std::uint32_t>* out;

    void dfs(int u, std::uint32_t emask) {
      if (static_cast<int>(path.size()) == target) {
        if (g.adj[u] & bit(start))
          out->push_back(emask | (std::uint32_t{1} << eidx[u][start]));
        return;
      }
      if (popcount(allowed & ~visited) < target - static_cast<int>(path.size()))
        return;
      for (Vmask m = g.adj[u] & allowed & ~visited; m; m &= m - 1) {
        int w = first_vertex(m);
        path.push_back(w);
        visited |= bit(w);
        dfs(w, emask | (std::uint32_t{1} << eidx[u][w]));
        path.pop_back();
        visited &= ~bit(w);
      }
    }
  };
  for (int s = 0; s < g.n; ++s) {
    Enum e{g, eidx, len, s, ~full_mask(s + 1) & full_mask(g.n), bit(s), {s}, &out};
    e.dfs(s, 0);
  }
  // Each cycle is produced twice (both orientations); dedupe.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

ArrowsResult arrows_cycle(const ColoredGraph& host, int len, std::uint64_t budget) {
  if (len < 3) throw usage_error("arrows: cycle length must be >= 3");
  SimpleGraph g(host.size());
  for (int v = 0; v < host.size(); ++v) g.adj[v] = host.adj_any(v);

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (Vmask m = g.adj[u] & ~full_mask(u + 1); m; m &= m - 1)
      edges.push_back({u, first_vertex(m)});
  int m = static_cast<int>(edges.size());

  ArrowsResult res;
  if (m == 0) {
    // no edges: no coloring can contain any cycle
    res.kind = ArrowsResult::No;
    res.counterexample = host;
    res.colorings_checked = 1;
    return res;
  }
  if (m > 32 || (std::uint64_t{1} << (m - 1)) > budget) {
    res.kind = ArrowsResult::BudgetExceeded;
    return res;
  }

  std::vector<std::vector<int>> eidx(g.n, std::vector<int>(g.n, -1));
  for (int i = 0; i < m; ++i) {
    auto [u, v] = edges[i];
    eidx[u][v] = eidx[v][u] = i;
  }
  std::vector<std::uint32_t> cycles;
  all_cycle_edge_masks(g, eidx, len, cycles);

  auto build_coloring = [&](std::uint64_t coin) {
    std::vector<EdgeSpec> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
      bool red = (i == 0) ? true : ((coin >> (i - 1)) & 1);
      es.push_back({edges[i].first, edges[i].second, red, !red});
    }
    return ColoredGraph::build(g.n, es);
  };

  std::uint64_t total = std::uint64_t{1} << (m - 1);
  for (std::uint64_t coin = 0; coin < total; ++coin) {
    std::uint32_t red = 1;  // edge 0 fixed red (color-swap symmetry)
    for (int i = 1; i < m; ++i)
      if ((coin >> (i - 1)) & 1) red |= std::uint32_t{1} << i;
    bool mono = false;
    for (std::uint32_t cm : cycles) {
      if ((cm & red) == cm || (cm & red) == 0) {
        mono = true;
        break;
      }
    }
    if (!mono) {
      ColoredGraph cx = build_coloring(coin);
      // independent re-check of the counterexample
      if (!find_cycle_of_length(monochrome_view(cx, Color::Red), len).empty() ||
          !find_cycle_of_length(monochrome_view(cx, Color::Blue), len).empty())
        throw std::logic_error("arrows counterexample failed re-check");
      res.kind = ArrowsResult::No;
      res.counterexample = cx;
      res.colorings_checked = coin + 1;
      return res;
    }
  }
  res.kind = ArrowsResult::Yes;
  res.colorings_checked = total;
  return res;
}

}  // namespace cgr
