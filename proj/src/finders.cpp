#include "cgr/finders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace cgr {

const char* find_status_name(FindStatus s) {
  switch (s) {
    case FindStatus::Found: return "found";
    case FindStatus::PreconditionFailed: return "precondition-failed";
    case FindStatus::SearchExhausted: return "search-exhausted";
  }
  return "?";
}

// --- exact subset DP --------------------------------------------------------

namespace {

std::vector<int> dp_walk_back(const SimpleGraph& g, const std::vector<std::uint32_t>& dp,
                              std::uint32_t mask, int start, int end) {
  std::vector<int> rev{end};
  int cur = end;
  while (mask != (std::uint32_t{1} << start)) {
    std::uint32_t prev_mask = mask ^ (std::uint32_t{1} << cur);
    std::uint32_t cands = dp[prev_mask] & static_cast<std::uint32_t>(g.adj[cur]);
    int p = std::countr_zero(cands);
    rev.push_back(p);
    mask = prev_mask;
    cur = p;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// dp[mask] = endpoints of simple paths from `start` covering exactly `mask`
std::vector<std::uint32_t> dp_paths_from(const SimpleGraph& g, int start) {
  int n = g.n;
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  dp[std::uint32_t{1} << start] = std::uint32_t{1} << start;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    std::uint32_t rest = full & ~mask;
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      if (static_cast<std::uint32_t>(g.adj[w]) & ends)
        dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
    }
  }
  return dp;
}

std::optional<std::vector<int>> dp_ham_path(const SimpleGraph& g, int from, int to) {
  int n = g.n;
  if (n > kDpLimit || n == 0) return std::nullopt;
  if (n == 1) {
    if (from != to) return std::nullopt;
    return std::vector<int>{from};
  }
  auto dp = dp_paths_from(g, from);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (!(dp[full] & (std::uint32_t{1} << to))) return std::nullopt;
  return dp_walk_back(g, dp, full, from, to);
}

std::optional<std::vector<int>> dp_ham_cycle(const SimpleGraph& g) {
  int n = g.n;
  if (n > kDpLimit || n < 3) return std::nullopt;
  auto dp = dp_paths_from(g, 0);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t closers = dp[full] & static_cast<std::uint32_t>(g.adj[0]);
  if (!closers) return std::nullopt;
  return dp_walk_back(g, dp, full, 0, std::countr_zero(closers));
}

// --- rotation-extension ------------------------------------------------------

int index_of(const std::vector<int>& path, int v) {
  for (size_t i = 0; i < path.size(); ++i)
    if (path[i] == v) return static_cast<int>(i);
  return -1;
}

std::optional<std::vector<int>> rotation_ham_cycle(const SimpleGraph& g) {
  int n = g.n;
  if (n < 3) return std::nullopt;
  const long long budget = 64LL * n * n;
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    Vmask on = bit(s);
    Vmask seen_ends = bit(s);
    long long rot = budget;
    while (static_cast<int>(path.size()) < n && rot > 0) {
      int u = path.back();
      Vmask ext = g.adj[u] & ~on;
      if (ext) {
        int w = first_vertex(ext);
        path.push_back(w);
        on |= bit(w);
        seen_ends = bit(w);
        continue;
      }
      bool rotated = false;
      for (Vmask cm = g.adj[u] & on; cm && !rotated; cm &= cm - 1) {
        int v = first_vertex(cm);
        int i = index_of(path, v);
        if (i >= static_cast<int>(path.size()) - 2) continue;
        int new_end = path[i + 1];
        if (seen_ends & bit(new_end)) continue;
        std::reverse(path.begin() + i + 1, path.end());
        seen_ends |= bit(new_end);
        rotated = true;
        --rot;
      }
      if (!rotated) break;
    }
    if (static_cast<int>(path.size()) == n) {
      Vmask seen2 = bit(path.back());
      long long rot2 = budget;
      while (rot2-- > 0) {
        int u = path.back();
        if (g.adj[u] & bit(path[0])) return path;
        bool rotated = false;
        for (Vmask cm = g.adj[u] & on; cm && !rotated; cm &= cm - 1) {
          int v = first_vertex(cm);
          int i = index_of(path, v);
          if (i >= static_cast<int>(path.size()) - 2) continue;
          int new_end = path[i + 1];
          if (seen2 & bit(new_end)) continue;
          std::reverse(path.begin() + i + 1, path.end());
          seen2 |= bit(new_end);
          rotated = true;
        }
        if (!rotated) break;
      }
    }
  }
  return std::nullopt;
}

// Finder-side fixed-length cycle search (the oracle keeps its own enumerator).
struct ExactCycle {
  const SimpleGraph& g;
  int target;
  int start;
  Vmask allowed;
  Vmask visited;
  std::vector<int> path;

  bool grow(int u) {
    int have = static_cast<int>(path.size());
    if (have == target) return g.adj[u] & bit(start);
    Vmask avail = allowed & ~visited;
    if (popcount(avail) < target - have) return false;
    // the root must stay reachable through what is left
    Vmask dom = avail | bit(start), reach = bit(u), fro = bit(u);
    while (fro) {
      Vmask nxt = 0;
      for (Vmask m = fro; m; m &= m - 1) nxt |= g.adj[first_vertex(m)];
      nxt &= dom & ~reach;
      reach |= nxt;
      fro = nxt;
    }
    if (!(reach & bit(start)) || popcount(reach & avail) < target - have) return false;
    for (Vmask m = g.adj[u] & avail; m; m &= m - 1) {
      int w = first_vertex(m);
      path.push_back(w);
      visited |= bit(w);
      if (grow(w)) return true;
      path.pop_back();
      visited &= ~bit(w);
    }
    return false;
  }
};

// A chord of an already-found cycle may cut it to the target length.
std::vector<int> shorten_by_chord(const std::vector<int>& cyc, const SimpleGraph& g,
                                  int target) {
  int L = static_cast<int>(cyc.size());
  for (int i = 0; i < L; ++i)
    for (int j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (!g.has(cyc[i], cyc[j])) continue;
      if (j - i + 1 == target)
        return std::vector<int>(cyc.begin() + i, cyc.begin() + j + 1);
      if (L - (j - i) + 1 == target) {
        std::vector<int> out(cyc.begin(), cyc.begin() + i + 1);
        out.insert(out.end(), cyc.begin() + j, cyc.end());
        return out;
      }
    }
  return {};
}

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle(const SimpleGraph& g) {
  if (auto cyc = rotation_ham_cycle(g)) return cyc;
  return dp_ham_cycle(g);
}

std::optional<std::vector<int>> find_hamiltonian_path(const SimpleGraph& g, int from,
                                                      int to) {
  return dp_ham_path(g, from, to);
}

std::optional<std::vector<int>> find_cycle_exact(const SimpleGraph& g, int len) {
  if (len < 3 || len > g.n) return std::nullopt;
  for (int s = 0; s < g.n; ++s) {
    ExactCycle ec{g, len, s, ~full_mask(s + 1) & full_mask(g.n), bit(s), {s}};
    if (popcount(g.adj[s] & ec.allowed) < 2) continue;
    if (ec.grow(s)) return ec.path;
  }
  return std::nullopt;
}

// --- blossom (Edmonds) -------------------------------------------------------

namespace {

struct BlossomState {
  const SimpleGraph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;

  explicit BlossomState(const SimpleGraph& g_)
      : g(g_), n(g_.n), match(n, -1), parent(n, -1), base(n), used(n), in_blossom(n) {}

  int lca(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_augmenting(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (Vmask m = g.adj[v]; m; m &= m - 1) {
        int w = first_vertex(m);
        if (base[v] == base[w] || match[v] == w) continue;
        if (w == root || (match[w] != -1 && parent[match[w]] != -1)) {
          int cur_base = lca(v, w);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur_base, w);
          mark_path(w, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[w] == -1) {
          parent[w] = v;
          if (match[w] == -1) return w;
          used[match[w]] = true;
          queue.push_back(match[w]);
        }
      }
    }
    return -1;
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int w = find_augmenting(v);
      while (w != -1) {
        int pv = parent[w], ppv = match[pv];
        match[w] = pv;
        match[pv] = w;
        w = ppv;
      }
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g) {
  BlossomState st(g);
  st.run();
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n; ++v)
    if (st.match[v] > v) out.push_back({v, st.match[v]});
  return out;
}

// --- Hall --------------------------------------------------------------------

HallResult hall_matching(const BipartiteView& view) {
  if (view.x_size() > view.y_size())
    throw usage_error("hall_matching: |X| must be <= |Y|");
  const ColoredGraph& g = *view.g;
  std::vector<int> match_of(g.size(), -1);  // parent ids, both directions

  // Kuhn's augmenting paths, vertices in ascending order.
  Vmask tried = 0;
  std::function<bool(int)> kuhn = [&](int x) -> bool {
    for (Vmask m = view.neighbors(x); m; m &= m - 1) {
      int y = first_vertex(m);
      if (tried & bit(y)) continue;
      tried |= bit(y);
      if (match_of[y] == -1 || kuhn(match_of[y])) {
        match_of[y] = x;
        match_of[x] = y;
        return true;
      }
    }
    return false;
  };

  for (Vmask xm = view.xs; xm; xm &= xm - 1) {
    int x = first_vertex(xm);
    tried = 0;
    if (!kuhn(x)) {
      // Hall violator: X-side of the alternating tree rooted at x
      Vmask s_set = bit(x), t_set = 0;
      bool grew = true;
      while (grew) {
        grew = false;
        Vmask nbrs = 0;
        for (Vmask m = s_set; m; m &= m - 1) nbrs |= view.neighbors(first_vertex(m));
        for (Vmask m = nbrs & ~t_set; m; m &= m - 1) {
          int y = first_vertex(m);
          t_set |= bit(y);
          if (match_of[y] != -1 && !(s_set & bit(match_of[y]))) {
            s_set |= bit(match_of[y]);
            grew = true;
          }
        }
      }
      HallResult out;
      for (Vmask m = s_set; m; m &= m - 1) out.violator.push_back(first_vertex(m));
      for (Vmask m = t_set; m; m &= m - 1) out.violator_nbrs.push_back(first_vertex(m));
      return out;
    }
  }
  Matching result;
  result.color = view.color;
  for (Vmask xm = view.xs; xm; xm &= xm - 1) {
    int x = first_vertex(xm);
    result.edges.push_back({x, match_of[x]});
  }
  return HallResult{result, {}, {}};
}

// --- Chvátal -----------------------------------------------------------------

bool chvatal_condition(const SimpleGraph& g, PrecFail* why) {
  int n = g.n;
  std::vector<int> d(n);
  for (int v = 0; v < n; ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  for (int k = 1; 2 * k < n; ++k) {
    if (d[k - 1] <= k && d[n - k - 1] < n - k) {
      if (why)
        *why = {"d_k <= k < n/2 requires d_{n-k} >= n-k; fails at k=" + std::to_string(k) +
                    " (d_k=" + std::to_string(d[k - 1]) + ", d_{n-k}=" +
                    std::to_string(d[n - k - 1]) + ", n=" + std::to_string(n) + ")",
                {k}};
      return false;
    }
  }
  return true;
}

HamiltonianResult chvatal_hamiltonian(const SimpleGraph& g, Color cert_color) {
  if (g.n < 3) throw usage_error("chvatal_hamiltonian: n must be >= 3");
  HamiltonianResult out;
  PrecFail why;
  out.condition_holds = chvatal_condition(g, &why);
  if (!out.condition_holds) out.condition_fail = why;
  // the search runs either way; the condition only decides the guarantee
  if (auto cyc = find_hamiltonian_cycle(g)) {
    out.status = FindStatus::Found;
    out.cycle = CycleCertificate{*cyc, cert_color};
  } else {
    out.status = FindStatus::SearchExhausted;
  }
  return out;
}

// --- Bondy -------------------------------------------------------------------

bool bondy_condition(const SimpleGraph& g, PrecFail* why) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (g.has(u, v)) continue;
      if (g.degree(u) + g.degree(v) < g.n) {
        if (why)
          *why = {"non-adjacent pair degree sum >= n fails at (" + std::to_string(u) +
                      "," + std::to_string(v) + "): " + std::to_string(g.degree(u)) +
                      "+" + std::to_string(g.degree(v)) + " < " + std::to_string(g.n),
                  {u, v}};
        return false;
      }
    }
  return true;
}

namespace {

// exact detection of the balanced complete bipartite exception
bool is_balanced_complete_bipartite(const SimpleGraph& g, Vmask* xs, Vmask* ys) {
  int n = g.n;
  if (n < 2) return false;
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (Vmask m = g.adj[v]; m; m &= m - 1) {
      int w = first_vertex(m);
      if (side[w] == -1) {
        side[w] = side[v] ^ 1;
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return false;  // disconnected
  Vmask a = 0, b = 0;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b) |= bit(v);
  int ca = popcount(a), cb = popcount(b);
  if (std::max(ca, cb) != (n + 1) / 2) return false;
  for (Vmask m = a; m; m &= m - 1)
    if (g.adj[first_vertex(m)] != b) return false;
  *xs = a;
  *ys = b;
  return true;
}

}  // namespace

PancyclicResult bondy_pancyclic(const SimpleGraph& g, Color cert_color) {
  if (g.n < 3) throw usage_error("bondy_pancyclic: n must be >= 3");
  PancyclicResult out;
  PrecFail why;
  if (!bondy_condition(g, &why)) {
    out.kind = PancyclicResult::PreconditionFailed;
    out.why = why;
    return out;
  }
  Vmask xs, ys;
  if (is_balanced_complete_bipartite(g, &xs, &ys)) {
    out.kind = PancyclicResult::CompleteBipartite;
    out.part_x = xs;
    out.part_y = ys;
    return out;
  }
  std::vector<std::vector<int>> found;
  for (int len = g.n; len >= 3; --len) {
    std::vector<int> cyc;
    for (const auto& longer : found) {
      cyc = shorten_by_chord(longer, g, len);
      if (!cyc.empty()) break;
    }
    if (cyc.empty()) {
      if (len == g.n) {
        if (auto ham = find_hamiltonian_cycle(g)) cyc = *ham;
      } else if (auto c = find_cycle_exact(g, len)) {
        cyc = *c;
      }
    }
    if (cyc.empty()) {
      out.missing_lengths.push_back(len);
    } else {
      found.push_back(cyc);
      out.cycles.push_back(CycleCertificate{cyc, cert_color});
    }
  }
  std::reverse(out.cycles.begin(), out.cycles.end());
  out.kind = out.missing_lengths.empty() ? PancyclicResult::AllLengths
                                         : PancyclicResult::SearchExhausted;
  return out;
}

// --- Bagga–Varma -------------------------------------------------------------

bool bagga_varma_condition(const BipartiteView& view, PrecFail* why) {
  int q = view.x_size();
  if (q < 4) {
    if (why)
      *why = {"part size >= 4 (guard: the balanced 3+3 boundary is not covered)",
              {q}};
    return false;
  }
  for (Vmask xm = view.xs; xm; xm &= xm - 1) {
    int x = first_vertex(xm);
    for (Vmask ym = view.ys & ~view.neighbors(x); ym; ym &= ym - 1) {
      int y = first_vertex(ym);
      if (view.degree(x) + view.degree(y) < q + 1) {
        if (why)
          *why = {"non-adjacent cross pair degree sum >= n+1 fails at (" +
                      std::to_string(x) + "," + std::to_string(y) + "): " +
                      std::to_string(view.degree(x)) + "+" +
                      std::to_string(view.degree(y)) + " < " + std::to_string(q + 1),
                  {x, y}};
        return false;
      }
    }
  }
  return true;
}

EvenCyclesResult bagga_varma_bipancyclic(const BipartiteView& view) {
  if (view.x_size() != view.y_size())
    throw usage_error("bagga_varma: parts must have equal size");
  EvenCyclesResult out;
  PrecFail why;
  if (!bagga_varma_condition(view, &why)) {
    out.status = FindStatus::PreconditionFailed;
    out.why = why;
    return out;
  }
  Induced ind = induce_view(view, view.xs, view.ys);
  std::vector<std::vector<int>> found;
  for (int len = 2 * view.x_size(); len >= 4; len -= 2) {
    std::vector<int> cyc;
    for (const auto& longer : found) {
      cyc = shorten_by_chord(longer, ind.g, len);
      if (!cyc.empty()) break;
    }
    if (cyc.empty()) {
      if (len == ind.g.n) {
        if (auto ham = find_hamiltonian_cycle(ind.g)) cyc = *ham;
      }
      if (cyc.empty()) {
        if (auto c = find_cycle_exact(ind.g, len)) cyc = *c;
      }
    }
    if (cyc.empty()) {
      out.missing_lengths.push_back(len);
    } else {
      found.push_back(cyc);
      out.cycles.push_back(CycleCertificate{ind.to_parent(cyc), view.color});
    }
  }
  std::reverse(out.cycles.begin(), out.cycles.end());
  std::reverse(out.missing_lengths.begin(), out.missing_lengths.end());
  out.status =
      out.missing_lengths.empty() ? FindStatus::Found : FindStatus::SearchExhausted;
  return out;
}

// --- Berge -------------------------------------------------------------------

bool berge_condition(const BipartiteView& view, PrecFail* why) {
  int m = view.x_size();
  auto sorted_degrees = [&](Vmask part) {
    std::vector<int> d;
    for (Vmask vm = part; vm; vm &= vm - 1) d.push_back(view.degree(first_vertex(vm)));
    std::sort(d.begin(), d.end());
    return d;
  };
  std::vector<int> du = sorted_degrees(view.xs), dv = sorted_degrees(view.ys);
  int iu = -1, jv = -1;
  for (int i = 1; i <= m; ++i)
    if (du[i - 1] <= i + 1) {
      iu = i;
      break;
    }
  for (int j = 1; j <= m; ++j)
    if (dv[j - 1] <= j + 1) {
      jv = j;
      break;
    }
  // no qualifying index on a side: the hypothesis is vacuous, condition passes
  if (iu == -1 || jv == -1) return true;
  if (du[iu - 1] + dv[jv - 1] >= m + 2) return true;
  if (why)
    *why = {"deg(u_i) + deg(v_j) >= m+2 fails: " + std::to_string(du[iu - 1]) + "+" +
                std::to_string(dv[jv - 1]) + " < " + std::to_string(m + 2) + " (i=" +
                std::to_string(iu) + ", j=" + std::to_string(jv) + ")",
            {iu, jv}};
  return false;
}

HamPathResult berge_ham_path(const BipartiteView& view, int from, int to) {
  if (view.x_size() != view.y_size())
    throw usage_error("berge_ham_path: parts must have equal size");
  if (!view.contains(from) || !view.contains(to))
    throw usage_error("berge_ham_path: endpoint outside the view");
  if (view.on_x(from) == view.on_x(to))
    throw usage_error("berge_ham_path: endpoints must be on opposite sides");
  HamPathResult out;
  PrecFail why;
  out.condition_holds = berge_condition(view, &why);
  if (!out.condition_holds) out.condition_fail = why;
  Induced ind = induce_view(view, view.xs, view.ys);
  if (ind.g.n > kDpLimit)
    throw refusal_error("berge_ham_path: view too large for the exact engine");
  if (auto p = find_hamiltonian_path(ind.g, ind.to_compact(from), ind.to_compact(to))) {
    out.status = FindStatus::Found;
    out.path = PathCertificate{ind.to_parent(*p), view.color};
  } else {
    out.status = FindStatus::SearchExhausted;
  }
  return out;
}

// --- Jackson -----------------------------------------------------------------

JacksonResult jackson_cycle(const BipartiteView& view) {
  JacksonResult out;
  int xsz = view.x_size(), ysz = view.y_size();
  if (xsz < 2) {
    out.status = FindStatus::PreconditionFailed;
    out.why = PrecFail{"|X| >= 2 fails: |X|=" + std::to_string(xsz), {xsz}};
    return out;
  }
  int k = ysz;
  for (Vmask m = view.xs; m; m &= m - 1)
    k = std::min(k, view.degree(first_vertex(m)));
  out.k = k;
  if (xsz > k) {
    out.status = FindStatus::PreconditionFailed;
    out.why = PrecFail{"|X| <= k fails: |X|=" + std::to_string(xsz) +
                           ", k=" + std::to_string(k),
                       {xsz, k}};
    return out;
  }
  if (ysz > 2 * k - 2) {
    out.status = FindStatus::PreconditionFailed;
    out.why = PrecFail{"|Y| <= 2k-2 fails: |Y|=" + std::to_string(ysz) +
                           ", k=" + std::to_string(k),
                       {ysz, k}};
    return out;
  }
  Induced ind = induce_view(view, view.xs, view.ys);
  if (auto cyc = find_cycle_exact(ind.g, 2 * xsz)) {
    out.status = FindStatus::Found;
    out.cycle = CycleCertificate{ind.to_parent(*cyc), view.color};
  } else {
    out.status = FindStatus::SearchExhausted;
  }
  return out;
}

// --- Bondy–Simonovits --------------------------------------------------------

EvenCyclesResult dense_even_cycles(const SimpleGraph& g, int q, Color cert_color,
                                   bool force) {
  if (q < 1) throw usage_error("dense_even_cycles: q must be >= 1");
  EvenCyclesResult out;
  double threshold = 100.0 * q * std::pow(static_cast<double>(g.n), 1.0 + 1.0 / q);
  int edges = g.edge_count();
  if (static_cast<double>(edges) <= threshold && !force) {
    out.status = FindStatus::PreconditionFailed;
    out.why = PrecFail{"|E| > 100*q*n^(1+1/q) fails: " + std::to_string(edges) +
                           " <= " + std::to_string(threshold),
                       {edges}};
    return out;
  }
  int lo = std::max(4, 2 * q);
  // the theorem's window can exceed n at desk scale; a cycle cannot
  int hi = static_cast<int>(std::min(static_cast<double>(g.n),
                                     2.0 * std::pow(static_cast<double>(g.n), 1.0 / q)));
  std::vector<std::vector<int>> found;
  for (int len = hi - (hi % 2); len >= lo; len -= 2) {
    std::vector<int> cyc;
    for (const auto& longer : found) {
      cyc = shorten_by_chord(longer, g, len);
      if (!cyc.empty()) break;
    }
    if (cyc.empty()) {
      if (auto c = find_cycle_exact(g, len)) cyc = *c;
    }
    if (cyc.empty()) {
      out.missing_lengths.push_back(len);
    } else {
      found.push_back(cyc);
      out.cycles.push_back(CycleCertificate{cyc, cert_color});
    }
  }
  std::reverse(out.cycles.begin(), out.cycles.end());
  std::reverse(out.missing_lengths.begin(), out.missing_lengths.end());
  out.status =
      out.missing_lengths.empty() ? FindStatus::Found : FindStatus::SearchExhausted;
  return out;
}

// --- connected matching --------------------------------------------------------

std::vector<Vmask> components(const SimpleGraph& g) {
  std::vector<Vmask> out;
  Vmask seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen & bit(s)) continue;
    Vmask comp = bit(s), frontier = bit(s);
    while (frontier) {
      Vmask next = 0;
      for (Vmask m = frontier; m; m &= m - 1) next |= g.adj[first_vertex(m)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

ConnectedMatchingResult connected_matching(const ColoredGraph& g, Color c) {
  SimpleGraph view = monochrome_view(g, c);
  ConnectedMatchingResult best;
  best.matching.color = c;
  int best_size = -1;
  for (Vmask comp : components(view)) {
    Induced ind = induce(view, comp);
    auto edges = maximum_matching(ind.g);
    if (static_cast<int>(edges.size()) > best_size) {
      best_size = static_cast<int>(edges.size());
      best.component = comp;
      best.matching.edges.clear();
      for (auto [u, v] : edges) {
        int a = ind.orig[u], b = ind.orig[v];
        best.matching.edges.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(best.matching.edges.begin(), best.matching.edges.end());
    }
  }
  return best;
}

}  // namespace cgr
