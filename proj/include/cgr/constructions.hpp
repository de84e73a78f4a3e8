#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "cgr/graph.hpp"
#include "cgr/witnesses.hpp"

namespace cgr {

// Machine-checkable expectations attached to each generated instance; the
// exact oracle re-verifies them in tests.
struct Expectations {
  std::optional<int> min_degree;           // exact value
  std::optional<int> circumference;        // exact monochromatic circumference
  std::optional<int> circumference_max;    // upper bound
  std::optional<std::string> verdict_branch;
  std::optional<std::set<int>> red_lengths;   // exact red spectrum
  std::optional<std::set<int>> blue_lengths;  // exact blue spectrum
  std::optional<int> absent_length;        // no monochromatic cycle of this length
  bool no_mono_cycles = false;
};

struct GenResult {
  ColoredGraph g;
  Expectations expect;
};

// Deterministic 64-bit generator (splitmix64); library-level so instances are
// reproducible across compilers.
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
};

// K_{3t+r} split into U1 (2t+r) and U2 (t): inside blue, across red.
GenResult example1(int t, int r);

enum class IntraColoring { Coin, AllRed, AllBlue };

// n-2 vertices in four parts plus {x,y}; the two missing bipartite pairs are
// deleted from K_n; cross pairs colored per the construction, x all-red,
// y all-blue except the red edge xy, intra-part edges per `intra`.
GenResult example2(int n, std::uint64_t seed, IntraColoring intra = IntraColoring::Coin);

// K_{3t+1} split near-evenly: inside blue, across red.
GenResult example3(int t);

GenResult k4_two_paths();
GenResult k5_two_bulls();

// Random host with min degree >= ceil((3n-1)/4) and a fair-coin 2-coloring
// (no dual edges).
GenResult random_min_degree(int n, std::uint64_t seed);

// --- stability-engine instances -----------------------------------------

struct FourPartPlanting {
  enum Kind { None, Case1, Case2, Case3, Case4, InsideEdge } kind = None;
  // InsideEdge: red edge inside U2 plus two X_R-type vertices with types
  // (1,3) and (1,4), the configuration of the inside-edge detour route.
};

struct FourPartResult {
  ColoredGraph g;
  PartitionWitness witness;
  std::optional<GlueStructure> structure;  // present for Case1..Case4
  Expectations expect;
};

// Near-complete four-part structure: R[U1,U2], R[U3,U4], B[U1,U3], B[U2,U4]
// complete, the two opposite pairs deleted, intra-part edges blue, plus a few
// outside vertices (V0) with part-like profiles and the planted structure.
FourPartResult four_part_instance(int n, FourPartPlanting planting, std::uint64_t seed,
                                  Delta delta = {});

struct SparseCaseResult {
  ColoredGraph g;
  SparseSetWitness witness;
};

// target_case 1: |L ∪ L'| >= 2t+r (pancyclic + augmented-hamiltonian route);
// target_case 2: |L ∪ L'| < 2t+r (unbalanced bipartite cycle route).
SparseCaseResult sparse_set_instance(int n, int target_case, std::uint64_t seed,
                                     Delta delta = {});

// One record describing any generatable instance; generate() validates the
// family's parameter constraints and dispatches.
struct InstanceSpec {
  enum Family {
    Example1,
    Example2,
    Example3,
    K4Paths,
    K5Bulls,
    RandomMinDeg,
    SparseSetCase,
    FourPartCase,
  } family = Example1;
  int t = 2, r = 0, n = 12;
  std::uint64_t seed = 0;
  Delta delta;
  IntraColoring intra = IntraColoring::Coin;
  FourPartPlanting planting;
  int sparse_case = 1;
};

struct Instance {
  ColoredGraph g;
  Expectations expect;
  std::optional<SparseSetWitness> sparse;
  std::optional<PartitionWitness> partition;
  std::optional<GlueStructure> structure;
};

Instance generate(const InstanceSpec& spec);
const char* family_name(InstanceSpec::Family f);
std::optional<InstanceSpec::Family> family_from_name(const std::string& s);

}  // namespace cgr
