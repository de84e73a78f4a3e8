#pragma once

#include <map>
#include <optional>
#include <set>

#include "cgr/graph.hpp"

namespace cgr {

struct SpectrumOptions {
  int max_n_exact = 14;  // refusal (not silence) beyond this
  int jobs = 1;          // per-length searches may run in parallel
};

// Achievable cycle lengths of one color class, each with a verified witness.
struct ColorSpectrum {
  std::set<int> lengths;
  std::map<int, CycleCertificate> witness;
};

struct Circumference {
  int length = 0;
  Color color = Color::Red;
  CycleCertificate cert;
};

struct SpectrumReport {
  int n = 0;
  ColorSpectrum red, blue;
  std::optional<Circumference> circumference;
  bool exact = false;

  const ColorSpectrum& of(Color c) const { return c == Color::Red ? red : blue; }
};

enum class BranchKind { AllLengths, AllEven, Neither };

struct TheoremVerdict {
  int n = 0, t = 0, r = 0;  // n = 3t + r, r in {0,1,2}
  bool holds = false;
  BranchKind branch = BranchKind::Neither;
  Color branch_color = Color::Red;  // meaningful unless Neither
  std::set<int> missing;            // lengths absent from the best branch
};

std::string branch_string(const TheoremVerdict& v);

// Exhaustive per-length search over monochromatic simple cycles. Lengths are
// searched in decreasing order; witnesses found for longer cycles seed
// shorter searches through chord shortcuts.
ColorSpectrum cycle_spectrum(const ColoredGraph& g, Color c,
                             const SpectrumOptions& opts = {});
SpectrumReport spectrum_report(const ColoredGraph& g, const SpectrumOptions& opts = {});

std::optional<Circumference> monochromatic_circumference(
    const ColoredGraph& g, const SpectrumOptions& opts = {});

TheoremVerdict theorem_verdict(const ColoredGraph& g, const SpectrumOptions& opts = {});
TheoremVerdict verdict_from_report(const SpectrumReport& rep);

// --- arrowing on tiny hosts ---------------------------------------------

struct ArrowsResult {
  enum Kind { Yes, No, BudgetExceeded } kind = BudgetExceeded;
  std::optional<ColoredGraph> counterexample;  // verified, for kind == No
  std::uint64_t colorings_checked = 0;
};

// Does every 2-coloring of the host's edges contain a monochromatic cycle of
// length exactly len? Exhaustive over 2^|E| colorings, halved by fixing the
// color of the lexicographically first edge. Host colors are ignored.
ArrowsResult arrows_cycle(const ColoredGraph& host, int len,
                          std::uint64_t budget = std::uint64_t{1} << 26);

// Shared exact primitive: one simple cycle of length exactly len in a bitset
// adjacency, lowest-vertex-first tie-breaking, or empty if none exists.
std::vector<int> find_cycle_of_length(const SimpleGraph& g, int len);

}  // namespace cgr
