#include <doctest.h>

#include "cgr/constructions.hpp"
#include "cgr/spectrum.hpp"
#include "util.hpp"

using namespace cgr;

namespace {

std::set<int> lengths(const ColoredGraph& g, Color c) {
  return cycle_spectrum(g, c).lengths;
}

}  // namespace

TEST_CASE("spectrum: all-red K4") {
  ColoredGraph g = test::complete(4, Color::Red);
  CHECK(lengths(g, Color::Red) == std::set<int>{3, 4});
  CHECK(lengths(g, Color::Blue).empty());
}

TEST_CASE("spectrum: extremal split instance at t=2 (n=7)") {
  ColoredGraph g = example3(2).g;  // red K_{3,4}, blue K3 + K4
  CHECK(lengths(g, Color::Red) == std::set<int>{4, 6});
  CHECK(lengths(g, Color::Blue) == std::set<int>{3, 4});
}

TEST_CASE("spectrum: every reported length carries a verified witness") {
  test::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ColoredGraph g = test::random_colored(9, rng, 0.1);
    for (Color c : {Color::Red, Color::Blue}) {
      ColorSpectrum sp = cycle_spectrum(g, c);
      CHECK(sp.lengths.size() == sp.witness.size());
      for (const auto& [len, cert] : sp.witness) {
        CHECK(cert.length() == len);
        CHECK(verify_cycle(g, cert).ok);
      }
    }
  }
}

TEST_CASE("spectrum refuses beyond the exact threshold") {
  ColoredGraph g = test::complete(15, Color::Red);
  CHECK_THROWS_AS(cycle_spectrum(g, Color::Red), refusal_error);
  CHECK_NOTHROW(cycle_spectrum(g, Color::Red, SpectrumOptions{15, 1}));
}

TEST_CASE("spectrum matches a naive existence check per length") {
  test::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    ColoredGraph g = test::random_colored(8, rng, 0.1, 0.5);
    for (Color c : {Color::Red, Color::Blue}) {
      std::set<int> got = lengths(g, c);
      SimpleGraph view = monochrome_view(g, c);
      for (int len = 3; len <= 8; ++len)
        CHECK(got.count(len) == (test::slow_has_cycle(view, len) ? 1u : 0u));
    }
  }
}

TEST_CASE("parallel spectra agree with serial as sets") {
  test::Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    ColoredGraph g = test::random_colored(10, rng, 0.1);
    SpectrumOptions serial{14, 1}, parallel{14, 4};
    CHECK(cycle_spectrum(g, Color::Red, serial).lengths ==
          cycle_spectrum(g, Color::Red, parallel).lengths);
  }
}

TEST_CASE("circumference: decomposition hosts") {
  CHECK(!monochromatic_circumference(k4_two_paths().g).has_value());
  auto bulls = monochromatic_circumference(k5_two_bulls().g);
  REQUIRE(bulls.has_value());
  CHECK(bulls->length == 3);
  auto e1 = monochromatic_circumference(example1(2, 0).g);
  REQUIRE(e1.has_value());
  CHECK(e1->length == 4);
  CHECK(e1->color == Color::Blue);
}

TEST_CASE("verdict: worked examples") {
  TheoremVerdict v1 = theorem_verdict(example1(2, 0).g);
  CHECK(v1.holds);
  CHECK(branch_string(v1) == "AllLengths(Blue)");

  TheoremVerdict v3 = theorem_verdict(example3(2).g);  // n=7, r=1
  CHECK(v3.holds);
  CHECK(branch_string(v3) == "AllEven(Red)");

  TheoremVerdict v9 = theorem_verdict(test::complete(9, Color::Red));
  CHECK(v9.holds);
  CHECK(branch_string(v9) == "AllLengths(Red)");
}

TEST_CASE("verdict: the K5 bulls coloring fails both branches") {
  TheoremVerdict v = theorem_verdict(k5_two_bulls().g);  // n=5: t=1, r=2
  CHECK(!v.holds);
  CHECK(v.branch == BranchKind::Neither);
  CHECK(!v.missing.empty());
}

TEST_CASE("arrows: K3 does not arrow C3; K6 does") {
  ArrowsResult k3 = arrows_cycle(test::complete(3, Color::Red), 3);
  CHECK(k3.kind == ArrowsResult::No);
  REQUIRE(k3.counterexample.has_value());

  ArrowsResult k6 = arrows_cycle(test::complete(6, Color::Red), 3);
  CHECK(k6.kind == ArrowsResult::Yes);
  CHECK(k6.colorings_checked == (1u << 14));
}

TEST_CASE("arrows: K5 avoids C4 exactly by a bulls-like coloring") {
  ArrowsResult res = arrows_cycle(test::complete(5, Color::Red), 4);
  CHECK(res.kind == ArrowsResult::No);
  REQUIRE(res.counterexample.has_value());
  const ColoredGraph& cx = *res.counterexample;
  // both color classes have a triangle as their only cycle
  CHECK(lengths(cx, Color::Red) == std::set<int>{3});
  CHECK(lengths(cx, Color::Blue) == std::set<int>{3});
}

TEST_CASE("arrows: budget refusal") {
  ArrowsResult res = arrows_cycle(test::complete(8, Color::Red), 4, 1 << 10);
  CHECK(res.kind == ArrowsResult::BudgetExceeded);
}

TEST_CASE("arrows is antitone in the target length on K6") {
  // once arrowing fails for some length it keeps failing for longer ones
  bool seen_no = false;
  for (int len = 3; len <= 6; ++len) {
    ArrowsResult res = arrows_cycle(test::complete(6, Color::Red), len);
    if (res.kind == ArrowsResult::No) seen_no = true;
    if (seen_no) CHECK(res.kind == ArrowsResult::No);
  }
}

TEST_CASE("color-swap symmetry of spectra") {
  test::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    ColoredGraph g = test::random_colored(9, rng, 0.1);
    CHECK(lengths(g.swap_colors(), Color::Red) == lengths(g, Color::Blue));
    CHECK(lengths(g.swap_colors(), Color::Blue) == lengths(g, Color::Red));
  }
}

TEST_CASE("relabeling invariance of spectra") {
  test::Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 8;
    ColoredGraph g = test::random_colored(n, rng, 0.1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
    ColoredGraph h = g.relabel(perm);
    for (Color c : {Color::Red, Color::Blue}) CHECK(lengths(g, c) == lengths(h, c));
  }
}

TEST_CASE("edge monotonicity: adding an edge never removes a length") {
  test::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    ColoredGraph g = test::random_colored(8, rng, 0.0, 0.4);
    int u = static_cast<int>(rng.below(8)), v = static_cast<int>(rng.below(8));
    if (u == v) continue;
    Color c = rng.coin() ? Color::Red : Color::Blue;
    std::set<int> before = lengths(g, c);
    std::set<int> after = lengths(g.with_edge(u, v, c), c);
    for (int len : before) CHECK(after.count(len));
  }
}
