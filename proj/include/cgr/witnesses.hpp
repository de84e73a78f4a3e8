#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgr/delta.hpp"
#include "cgr/graph.hpp"

namespace cgr {

// Sparse-monochromatic-set witness: the set L whose sparse_color class has
// small maximum degree inside it.
struct SparseSetWitness {
  Vmask L = 0;
  Color sparse_color = Color::Red;
  Delta delta;
};

// Four-part witness: U1..U4 and V0 partition the vertex set; X_R/X_B start
// empty and are filled by V0 processing.
struct PartitionWitness {
  Vmask U[4] = {0, 0, 0, 0};
  Vmask V0 = 0;
  Vmask XR = 0, XB = 0;
  Delta delta;

  Vmask all_parts() const { return U[0] | U[1] | U[2] | U[3]; }
  Vmask everything() const { return all_parts() | V0 | XR | XB; }
};

// The cross graphs constrained by the four-part structure: red edges between
// U1∪U2 and U3∪U4, blue edges between U1∪U3 and U2∪U4.
BipartiteView red_cross(const ColoredGraph& g, const PartitionWitness& w);
BipartiteView blue_cross(const ColoredGraph& g, const PartitionWitness& w);

// The four intra-pair views the path machinery works in.
BipartiteView pair_view(const ColoredGraph& g, const PartitionWitness& w, Color c,
                        bool first_pair);

struct CheckLine {
  std::string name;
  long long actual = 0;
  long long bound = 0;
  bool pass = false;
};

struct WitnessReport {
  bool ok = false;
  std::vector<CheckLine> lines;
  std::string summary() const;
};

WitnessReport verify_witness(const ColoredGraph& g, const SparseSetWitness& w);
WitnessReport verify_witness(const ColoredGraph& g, const PartitionWitness& w);

// A planted (or discovered) structure that connects the two monochromatic
// pair graphs: two vertex-disjoint connectors, each a single edge or a
// 2-edge path whose interior lies outside U1..U4.
struct GlueStructure {
  Color color = Color::Red;
  std::vector<int> c1, c2;  // connector vertex sequences, length 2 or 3
  std::string kind;         // "two-edges", "cross-pair", "matching2", "two-paths"
};

bool structure_present(const ColoredGraph& g, const PartitionWitness& w,
                       const GlueStructure& s, std::string* why = nullptr);

}  // namespace cgr
