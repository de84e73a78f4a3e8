#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgr/graph.hpp"

namespace cgr {

// Why a theorem's hypothesis failed: the violated inequality plus the
// offending vertices/indices.
struct PrecFail {
  std::string inequality;
  std::vector<int> offenders;
};

enum class FindStatus { Found, PreconditionFailed, SearchExhausted };
const char* find_status_name(FindStatus s);

// --- shared search engine -------------------------------------------------
//
// Rotation-extension first, exact subset DP fallback (up to kDpLimit
// vertices). The theorems guarantee existence under their hypotheses, so the
// complete fallback discharges the contract; rotation handles the common
// case fast. Deterministic lowest-vertex tie-breaking throughout.

constexpr int kDpLimit = 22;

std::optional<std::vector<int>> find_hamiltonian_cycle(const SimpleGraph& g);
std::optional<std::vector<int>> find_hamiltonian_path(const SimpleGraph& g, int from,
                                                      int to);
// Any simple cycle of exactly the given length (finder-side exact search,
// separate from the oracle's enumerator).
std::optional<std::vector<int>> find_cycle_exact(const SimpleGraph& g, int len);

// Edmonds' blossom algorithm; edges come out sorted, lowest endpoints first.
std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g);

// --- the classical finders -------------------------------------------------

// Hall: |X| <= |Y|; either a matching saturating X or a violating S ⊆ X with
// |N(S)| < |S|. Augmenting-path construction, violator from the failed
// alternating tree.
struct HallResult {
  std::optional<Matching> matching;   // saturates X when present
  std::vector<int> violator;          // nonempty iff no saturating matching
  std::vector<int> violator_nbrs;
};
HallResult hall_matching(const BipartiteView& view);

// Chvátal degree-sequence condition; when it holds a Hamiltonian cycle is
// guaranteed. When it fails the search still runs and may find one.
struct HamiltonianResult {
  FindStatus status = FindStatus::SearchExhausted;
  bool condition_holds = false;
  std::optional<PrecFail> condition_fail;
  std::optional<CycleCertificate> cycle;
};
bool chvatal_condition(const SimpleGraph& g, PrecFail* why = nullptr);
HamiltonianResult chvatal_hamiltonian(const SimpleGraph& g, Color cert_color);

// Bondy: degree sum of every non-adjacent pair >= n implies pancyclic or
// exactly the balanced complete bipartite graph.
struct PancyclicResult {
  enum Kind { AllLengths, CompleteBipartite, PreconditionFailed, SearchExhausted } kind =
      SearchExhausted;
  std::vector<CycleCertificate> cycles;  // one per length in [3, n]
  Vmask part_x = 0, part_y = 0;          // for CompleteBipartite
  std::optional<PrecFail> why;
  std::vector<int> missing_lengths;      // only possible when kind == SearchExhausted
};
bool bondy_condition(const SimpleGraph& g, PrecFail* why = nullptr);
PancyclicResult bondy_pancyclic(const SimpleGraph& g, Color cert_color);

// Bagga–Varma: balanced bipartite, non-adjacent cross pairs with degree sum
// >= part+1 imply bipancyclic. Artifact guard: parts must have >= 4 vertices
// (the balanced 3+3 boundary admits C6 = K33 minus a matching).
struct EvenCyclesResult {
  FindStatus status = FindStatus::SearchExhausted;
  std::optional<PrecFail> why;
  std::vector<CycleCertificate> cycles;
  std::vector<int> missing_lengths;
};
bool bagga_varma_condition(const BipartiteView& view, PrecFail* why = nullptr);
EvenCyclesResult bagga_varma_bipancyclic(const BipartiteView& view);

// Berge: Hamiltonian bi-connected balanced bipartite graphs; returns the
// Hamiltonian path between the requested opposite-side endpoints.
struct HamPathResult {
  FindStatus status = FindStatus::SearchExhausted;
  bool condition_holds = false;
  std::optional<PrecFail> condition_fail;
  std::optional<PathCertificate> path;
};
bool berge_condition(const BipartiteView& view, PrecFail* why = nullptr);
HamPathResult berge_ham_path(const BipartiteView& view, int from, int to);

// Jackson: X-degrees >= k, 2 <= |X| <= k, |Y| <= 2k-2 give a cycle of length
// exactly 2|X|. k is taken as the actual minimum X-degree.
struct JacksonResult {
  FindStatus status = FindStatus::SearchExhausted;
  std::optional<PrecFail> why;
  int k = 0;
  std::optional<CycleCertificate> cycle;
};
JacksonResult jackson_cycle(const BipartiteView& view);

// Bondy–Simonovits: |E| > 100*q*n^(1+1/q) gives even cycles in
// [2q, 2n^(1/q)]. The bound is vacuous at desk scale; force searches anyway.
EvenCyclesResult dense_even_cycles(const SimpleGraph& g, int q, Color cert_color,
                                   bool force = false);

// The component of one color class holding the largest maximum matching.
struct ConnectedMatchingResult {
  Vmask component = 0;
  Matching matching;
};
ConnectedMatchingResult connected_matching(const ColoredGraph& g, Color c);

std::vector<Vmask> components(const SimpleGraph& g);

}  // namespace cgr
