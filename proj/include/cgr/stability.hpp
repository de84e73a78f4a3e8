#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgr/finders.hpp"
#include "cgr/graph.hpp"
#include "cgr/witnesses.hpp"

namespace cgr {

// --- stability classification ------------------------------------------------

struct StabilityCase {
  enum Kind { ConnectedMatching, SparseSet, FourPart, NoneFound } kind = NoneFound;
  Delta delta;
  // ConnectedMatching
  Color color = Color::Red;
  Vmask component = 0;
  Matching matching;
  // SparseSet
  std::optional<SparseSetWitness> sparse;
  // FourPart
  std::optional<PartitionWitness> partition;
};

const char* stability_kind_name(StabilityCase::Kind k);

// Case I is decided exactly via connected_matching (threshold: a matching
// covering >= (2/3+delta)n vertices, exact integer comparison). Cases II/III
// are searched heuristically (greedy peeling / monochromatic component
// splits); any returned witness is validator-verified. NoneFound is a legal
// answer at desk scale.
StabilityCase classify_stability(const ColoredGraph& g, Delta delta);

WitnessReport verify_witness(const ColoredGraph& g, const StabilityCase& sc);

// --- pipeline reports ----------------------------------------------------------

struct LengthOutcome {
  int length = 0;
  std::string route;  // which machinery produced the certificate
  std::optional<CycleCertificate> cert;
  std::string note;   // failed inequality when no certificate
  bool found() const { return cert.has_value(); }
};

struct PipelineReport {
  int case_taken = 0;  // route branch of the procedure, where meaningful
  std::vector<LengthOutcome> lengths;
  std::vector<std::string> notes;
  bool all_found() const {
    for (const auto& lo : lengths)
      if (!lo.found()) return false;
    return true;
  }
};

struct CycleSpec {
  int lo = 0, hi = 0;     // inclusive; 0,0 means the procedure's own default
  bool even_only = false;
};

// --- sparse-set procedure ---------------------------------------------------
//
// With L sparse in sparse_color: if L together with its high-other-degree
// outside vertices L' reaches 2t+r, other-color cycles of every length in
// [3, 2t+r] (pancyclicity inside L, then one-vertex augmentations closed by
// the degree-sequence condition); otherwise sparse-color even cycles in
// [4, 2t+2] through the unbalanced bipartite slices R[X, L].
PipelineReport sparse_set_cycles(const ColoredGraph& g, const SparseSetWitness& w,
                                 CycleSpec target = {});

// --- four-part procedure ------------------------------------------------------

struct V0Move {
  int v = -1;
  int rule = 0;       // 1..6, or 0 for the vertex-cover move
  std::string dest;   // "U1".."U4", "XR", "XB", "V0"
};

struct V0Process {
  PartitionWitness witness;       // updated
  std::vector<V0Move> moves;
  std::vector<int> unplaced;      // vertices matching no rule (reported, kept in V0)
  std::vector<int> conservation;  // |U1|+..+|U4|+|XR|+|XB|+|V0| after each step
  int red_cross_edges = 0, blue_cross_edges = 0;  // after processing
};

// Moves the (size <= 2) vertex covers of the two cross graphs into V0 when no
// size-3 cross matching exists, then assigns every V0 vertex by the first
// applicable of the six rules, evaluated against the current sets.
V0Process process_v0(const ColoredGraph& g, const PartitionWitness& w);

// --- exact-length paths and gluing ---------------------------------------------

// Path of length exactly len between the endpoints inside the bipartite view,
// built on subsets sized for a Hamiltonian path (odd len: opposite-side
// endpoints; even len: same-side endpoints routed through a neighbor of the
// second endpoint). `excluded` vertices are never used.
struct ExactPathResult {
  std::optional<PathCertificate> path;
  std::string note;  // failed inequality when empty
};
ExactPathResult exact_length_path(const BipartiteView& view, int from, int to, int len,
                                  Vmask excluded = 0);

// Window of cycle lengths 2l the glue construction can reach for this
// structure, from actual part sizes.
struct GlueWindow {
  int lo = 0, hi = 0;  // inclusive, even; lo > hi means empty
};
GlueWindow glue_window(const ColoredGraph& g, const PartitionWitness& w,
                       const GlueStructure& s);

// Cycle of length exactly two_ell: two exact-length paths through the
// monochromatic pair graphs, joined by the structure's connectors.
struct GlueResult {
  std::optional<CycleCertificate> cert;
  std::string note;
};
GlueResult glue_cycles(const ColoredGraph& g, const PartitionWitness& w,
                       const GlueStructure& s, int two_ell);

// --- the full four-part pipeline ------------------------------------------------
//
// (a) short even lengths through balanced bipancyclic slices of the two pair
//     graphs; (b) long even lengths through a discovered or planted glue
//     structure; (c) otherwise vertex-cover moves + V0 processing + the X_R
//     type analysis (two same-type or crossing-type vertices give two
//     disjoint length-2 paths); (d) the inside-edge detour when X_R holds
//     exactly two one-index-agreeing types and a sparse-color edge sits
//     inside a part.
PipelineReport four_part_cycles(const ColoredGraph& g, const PartitionWitness& w,
                                CycleSpec target = {});

}  // namespace cgr
