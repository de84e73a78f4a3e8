// Batch front-end for 2-edge-colored graph analysis: generators, the exact
// spectrum oracle, arrowing checks, theorem finders, and the stability
// pipeline. Exit codes: 0 success, 1 verified-negative result, 2 usage error,
// 3 refusal (size or budget).

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cgr/constructions.hpp"
#include "cgr/io.hpp"
#include "cgr/json_out.hpp"
#include "cgr/spectrum.hpp"
#include "cgr/stability.hpp"

using namespace cgr;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kRefusal = 3;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("RC_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw usage_error("RC_SEED must be an unsigned integer");
    }
  }
  return cli_seed;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

Delta parse_delta(const std::string& s) {
  auto d = Delta::parse(s);
  if (!d || !d->positive()) throw usage_error("bad --delta value '" + s + "'");
  return *d;
}

Color parse_color(const std::string& s) {
  if (s == "R" || s == "r") return Color::Red;
  if (s == "B" || s == "b") return Color::Blue;
  throw usage_error("--color must be R or B");
}

// bipartition of a monochromatic view by 2-coloring each component, the
// component root (lowest vertex) on side A
bool derive_bipartition(const SimpleGraph& g, Vmask* a_out, Vmask* b_out) {
  Vmask a = 0, b = 0;
  std::vector<int> side(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> queue{root};
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
  }
  for (int v = 0; v < g.n; ++v) (side[v] == 0 ? a : b) |= bit(v);
  *a_out = a;
  *b_out = b;
  return true;
}

int run_gen(const std::string& family, int t, int r, int n, std::uint64_t seed,
            const std::string& intra, const std::string& plant, int sparse_case,
            const std::string& delta_str, const std::string& out,
            std::string sidecar) {
  InstanceSpec spec;
  auto fam = family_from_name(family);
  if (!fam) throw usage_error("unknown family '" + family + "'");
  spec.family = *fam;
  spec.t = t;
  spec.r = r;
  spec.n = n;
  spec.seed = seed;
  spec.delta = parse_delta(delta_str);
  spec.sparse_case = sparse_case;
  if (intra == "coin") spec.intra = IntraColoring::Coin;
  else if (intra == "all-red") spec.intra = IntraColoring::AllRed;
  else if (intra == "all-blue") spec.intra = IntraColoring::AllBlue;
  else throw usage_error("--intra must be coin, all-red, or all-blue");
  if (plant == "none") spec.planting.kind = FourPartPlanting::None;
  else if (plant == "case1") spec.planting.kind = FourPartPlanting::Case1;
  else if (plant == "case2") spec.planting.kind = FourPartPlanting::Case2;
  else if (plant == "case3") spec.planting.kind = FourPartPlanting::Case3;
  else if (plant == "case4") spec.planting.kind = FourPartPlanting::Case4;
  else if (plant == "inside-edge") spec.planting.kind = FourPartPlanting::InsideEdge;
  else throw usage_error("--plant must be none|case1|case2|case3|case4|inside-edge");

  Instance inst = generate(spec);

  Json side;
  side["schema"] = "1";
  side["family"] = family;
  side["seed"] = seed;
  Json params = Json::object();
  switch (spec.family) {
    case InstanceSpec::Example1: params = {{"t", t}, {"r", r}}; break;
    case InstanceSpec::Example2: params = {{"n", n}, {"intra", intra}}; break;
    case InstanceSpec::Example3: params = {{"t", t}}; break;
    case InstanceSpec::RandomMinDeg: params = {{"n", n}}; break;
    case InstanceSpec::SparseSetCase:
      params = {{"n", n}, {"case", sparse_case}, {"delta", spec.delta.str()}};
      break;
    case InstanceSpec::FourPartCase:
      params = {{"n", n}, {"plant", plant}, {"delta", spec.delta.str()}};
      break;
    default: break;
  }
  side["params"] = params;
  if (spec.family == InstanceSpec::RandomMinDeg)
    side["expected"] =
        Json{{"min_degree_at_least", static_cast<int>(ceil_div(3LL * n - 1, 4))}};
  else
    side["expected"] = expectations_json(inst.expect);
  if (inst.sparse) side["witness"] = witness_json(*inst.sparse);
  if (inst.partition) side["witness"] = witness_json(*inst.partition);
  if (inst.structure) side["structure"] = structure_json(*inst.structure);

  write_text(out, serialize_graph(inst.g));
  if (sidecar.empty() && out != "-") sidecar = out + ".expect.json";
  if (!sidecar.empty() && sidecar != "-") {
    std::ofstream sf(sidecar);
    if (!sf) throw usage_error("cannot write '" + sidecar + "'");
    sf << side.dump(2) << "\n";
  }
  return kOk;
}

int run_find(const std::string& theorem, const std::string& file, Color color,
             int ep_u, int ep_v, int q, bool force) {
  ColoredGraph g = load_graph(file);
  Json j;
  j["schema"] = "1";
  j["theorem"] = theorem;
  j["color"] = std::string(1, color_char(color));
  int rc = kOk;

  auto view_or_throw = [&](bool need_balanced) {
    SimpleGraph view = monochrome_view(g, color);
    Vmask a, b;
    if (!derive_bipartition(view, &a, &b))
      throw usage_error("the " + std::string(color_name(color)) +
                        " view is not bipartite");
    if (need_balanced && popcount(a) != popcount(b))
      throw usage_error("the view's bipartition is unbalanced (" +
                        std::to_string(popcount(a)) + " vs " +
                        std::to_string(popcount(b)) + ")");
    if (popcount(a) > popcount(b)) std::swap(a, b);
    return make_view(g, a, b, color);
  };

  if (theorem == "hall") {
    HallResult res = hall_matching(view_or_throw(false));
    if (res.matching) {
      j["status"] = "found";
      j["certificates"] = Json::array({cert_json(*res.matching)});
    } else {
      j["status"] = "hall-violator";
      Json s = Json::array(), nb = Json::array();
      for (int v : res.violator) s.push_back(v + 1);
      for (int v : res.violator_nbrs) nb.push_back(v + 1);
      j["violator"] = s;
      j["violator_neighborhood"] = nb;
      rc = kNegative;
    }
  } else if (theorem == "chvatal") {
    HamiltonianResult res = chvatal_hamiltonian(monochrome_view(g, color), color);
    j["status"] = find_status_name(res.status);
    j["condition_holds"] = res.condition_holds;
    if (res.condition_fail) j["condition"] = res.condition_fail->inequality;
    if (res.cycle) j["certificates"] = Json::array({cert_json(*res.cycle)});
    if (res.status != FindStatus::Found) rc = kNegative;
  } else if (theorem == "bondy") {
    PancyclicResult res = bondy_pancyclic(monochrome_view(g, color), color);
    if (res.kind == PancyclicResult::AllLengths) {
      j["status"] = "found";
      Json certs = Json::array();
      for (const auto& c : res.cycles) certs.push_back(cert_json(c));
      j["certificates"] = certs;
    } else if (res.kind == PancyclicResult::CompleteBipartite) {
      j["status"] = "balanced-complete-bipartite";
      Json a = Json::array(), b = Json::array();
      for (Vmask m = res.part_x; m; m &= m - 1) a.push_back(first_vertex(m) + 1);
      for (Vmask m = res.part_y; m; m &= m - 1) b.push_back(first_vertex(m) + 1);
      j["parts"] = Json::array({a, b});
    } else {
      j["status"] = res.kind == PancyclicResult::PreconditionFailed
                        ? "precondition-failed"
                        : "search-exhausted";
      if (res.why) j["condition"] = res.why->inequality;
      rc = kNegative;
    }
  } else if (theorem == "bagga") {
    EvenCyclesResult res = bagga_varma_bipancyclic(view_or_throw(true));
    j["status"] = find_status_name(res.status);
    if (res.why) j["condition"] = res.why->inequality;
    Json certs = Json::array();
    for (const auto& c : res.cycles) certs.push_back(cert_json(c));
    j["certificates"] = certs;
    if (res.status != FindStatus::Found) rc = kNegative;
  } else if (theorem == "berge") {
    if (ep_u < 1 || ep_v < 1) throw usage_error("berge needs --endpoints u v");
    HamPathResult res = berge_ham_path(view_or_throw(true), ep_u - 1, ep_v - 1);
    j["status"] = find_status_name(res.status);
    j["condition_holds"] = res.condition_holds;
    if (res.condition_fail) j["condition"] = res.condition_fail->inequality;
    if (res.path) j["certificates"] = Json::array({cert_json(*res.path)});
    if (res.status != FindStatus::Found) rc = kNegative;
  } else if (theorem == "jackson") {
    JacksonResult res = jackson_cycle(view_or_throw(false));
    j["status"] = find_status_name(res.status);
    j["k"] = res.k;
    if (res.why) j["condition"] = res.why->inequality;
    if (res.cycle) j["certificates"] = Json::array({cert_json(*res.cycle)});
    if (res.status != FindStatus::Found) rc = kNegative;
  } else if (theorem == "dense-even") {
    EvenCyclesResult res =
        dense_even_cycles(monochrome_view(g, color), q, color, force);
    j["status"] = find_status_name(res.status);
    if (res.why) j["condition"] = res.why->inequality;
    Json certs = Json::array();
    for (const auto& c : res.cycles) certs.push_back(cert_json(c));
    j["certificates"] = certs;
    j["missing"] = res.missing_lengths;
    if (res.status == FindStatus::PreconditionFailed) rc = kNegative;
  } else if (theorem == "connected-matching") {
    ConnectedMatchingResult res = connected_matching(g, color);
    j["status"] = "found";
    Json comp = Json::array();
    for (Vmask m = res.component; m; m &= m - 1) comp.push_back(first_vertex(m) + 1);
    j["component"] = comp;
    j["certificates"] = Json::array({cert_json(res.matching)});
  } else {
    throw usage_error("unknown theorem '" + theorem +
                      "' (hall, chvatal, bondy, bagga, berge, jackson, dense-even, "
                      "connected-matching)");
  }
  emit(j);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-edge-colored graph toolkit: spectra, arrowing, cycle theorems, "
               "stability pipeline"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance family");
  std::string family, gen_out = "-", gen_sidecar, intra = "coin", plant = "none";
  std::string gen_delta = "1/1024";
  int gen_t = 2, gen_r = 0, gen_n = 12, sparse_case = 1;
  std::uint64_t seed = 0;
  gen->add_option("family", family,
                  "example1|example2|example3|k4paths|k5bulls|random|fourpart|sparse")
      ->required();
  gen->add_option("--t", gen_t, "parameter t");
  gen->add_option("--r", gen_r, "parameter r (0,1,2)");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--seed", seed, "generator seed (RC_SEED overrides)");
  gen->add_option("--intra", intra, "example2 intra-part coloring");
  gen->add_option("--plant", plant, "fourpart planted structure");
  gen->add_option("--case", sparse_case, "sparse instance case (1 or 2)");
  gen->add_option("--delta", gen_delta, "slack parameter, e.g. 1/1024");
  gen->add_option("--out", gen_out, "output graph file ('-' = stdout)");
  gen->add_option("--sidecar", gen_sidecar, "expectations/witness JSON path");

  // spectrum / verify
  auto* spectrum = app.add_subcommand("spectrum", "exact per-color cycle spectra");
  std::string spec_file;
  int max_n = 14, jobs = 1;
  spectrum->add_option("file", spec_file)->required();
  spectrum->add_option("--max-n", max_n, "exact-search size threshold");
  spectrum->add_option("--jobs", jobs, "parallel per-length workers");

  auto* verify = app.add_subcommand("verify", "structured-cycle verdict");
  std::string verify_file;
  verify->add_option("file", verify_file)->required();
  verify->add_option("--max-n", max_n);
  verify->add_option("--jobs", jobs);

  // arrows
  auto* arrows = app.add_subcommand("arrows", "exhaustive 2-coloring arrowing check");
  std::string arrows_file, cx_out;
  int arrows_len = 3;
  std::uint64_t budget = std::uint64_t{1} << 26;
  arrows->add_option("file", arrows_file)->required();
  arrows->add_option("--len", arrows_len, "cycle length")->required();
  arrows->add_option("--budget", budget, "max colorings to enumerate");
  arrows->add_option("--cx-out", cx_out, "write counterexample coloring here");

  // find
  auto* find = app.add_subcommand("find", "run a theorem finder");
  std::string theorem, find_file, color_str = "R";
  std::vector<int> endpoints;
  int q = 1;
  bool force = false;
  find->add_option("theorem", theorem)->required();
  find->add_option("file", find_file)->required();
  find->add_option("--color", color_str, "R or B (default R)");
  find->add_option("--endpoints", endpoints, "two 1-indexed endpoints")->expected(2);
  find->add_option("--q", q, "dense-even parameter q");
  find->add_flag("--force", force, "search even when the density bound fails");

  // classify
  auto* classify = app.add_subcommand("classify", "stability-case classifier");
  std::string classify_file, classify_delta = "1/1024";
  classify->add_option("file", classify_file)->required();
  classify->add_option("--delta", classify_delta);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "run a stability procedure");
  std::string pipe_file, witness_path;
  std::vector<int> target;
  pipeline->add_option("file", pipe_file)->required();
  pipeline->add_option("--witness", witness_path, "witness JSON (or gen sidecar)")
      ->required();
  pipeline->add_option("--target", target, "length range lo hi")->expected(2);

  // check
  auto* check = app.add_subcommand("check", "re-verify certificates against a graph");
  std::string check_file, certs_path;
  check->add_option("file", check_file)->required();
  check->add_option("--certs", certs_path, "JSON containing certificates")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "timing micro-benchmark");
  int bench_n = 12, bench_seeds = 5;
  bench->add_option("--n", bench_n);
  bench->add_option("--seeds", bench_seeds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen)
      return run_gen(family, gen_t, gen_r, gen_n, effective_seed(seed), intra, plant,
                     sparse_case, gen_delta, gen_out, gen_sidecar);

    if (*spectrum || *verify) {
      if (max_n < 3) throw usage_error("--max-n must be at least 3");
      if (jobs < 1) throw usage_error("--jobs must be positive");
      ColoredGraph g = load_graph(*spectrum ? spec_file : verify_file);
      SpectrumOptions opts{max_n, jobs};
      SpectrumReport rep = spectrum_report(g, opts);
      TheoremVerdict v = verdict_from_report(rep);
      emit(spectrum_json(rep, &v));
      return *verify ? (v.holds ? kOk : kNegative) : kOk;
    }

    if (*arrows) {
      ColoredGraph g = load_graph(arrows_file);
      ArrowsResult res = arrows_cycle(g, arrows_len, budget);
      Json j = arrows_json(res, arrows_len);
      if (res.kind == ArrowsResult::No && !cx_out.empty()) {
        write_text(cx_out, serialize_graph(*res.counterexample));
        j["counterexample_file"] = cx_out;
      } else if (res.kind == ArrowsResult::No) {
        j["counterexample"] = serialize_graph(*res.counterexample);
      }
      emit(j);
      return res.kind == ArrowsResult::Yes             ? kOk
             : res.kind == ArrowsResult::No            ? kNegative
                                                       : kRefusal;
    }

    if (*find) {
      int u = endpoints.size() == 2 ? endpoints[0] : 0;
      int v = endpoints.size() == 2 ? endpoints[1] : 0;
      return run_find(theorem, find_file, parse_color(color_str), u, v, q, force);
    }

    if (*classify) {
      ColoredGraph g = load_graph(classify_file);
      StabilityCase sc = classify_stability(g, parse_delta(classify_delta));
      emit(stability_json(sc));
      return sc.kind == StabilityCase::NoneFound ? kNegative : kOk;
    }

    if (*pipeline) {
      ColoredGraph g = load_graph(pipe_file);
      Json w = read_json(witness_path);
      if (w.contains("witness")) w = w["witness"];  // accept gen sidecars
      CycleSpec spec;
      if (target.size() == 2) {
        spec.lo = target[0];
        spec.hi = target[1];
      }
      PipelineReport rep;
      if (w.contains("L"))
        rep = sparse_set_cycles(g, sparse_witness_from_json(w), spec);
      else
        rep = four_part_cycles(g, partition_witness_from_json(w), spec);
      emit(pipeline_json(rep));
      return rep.all_found() ? kOk : kNegative;
    }

    if (*check) {
      ColoredGraph g = load_graph(check_file);
      Json doc = read_json(certs_path);
      auto certs = collect_certificates(doc);
      Json j;
      j["schema"] = "1";
      Json results = Json::array();
      bool all_ok = true;
      for (size_t i = 0; i < certs.size(); ++i) {
        CertCheck chk;
        switch (certs[i].kind) {
          case AnyCertificate::Cycle: chk = verify_cycle(g, certs[i].cycle); break;
          case AnyCertificate::Path: chk = verify_path(g, certs[i].path); break;
          case AnyCertificate::Match: chk = verify_matching(g, certs[i].matching); break;
        }
        results.push_back(Json{{"index", i},
                               {"ok", chk.ok},
                               {"reason", cert_fail_name(chk.reason)}});
        all_ok &= chk.ok;
      }
      j["count"] = certs.size();
      j["results"] = results;
      j["all_ok"] = all_ok;
      emit(j);
      return all_ok ? kOk : kNegative;
    }

    if (*bench) {
      Json rows = Json::array();
      for (int s = 0; s < bench_seeds; ++s) {
        GenResult res = random_min_degree(bench_n, static_cast<std::uint64_t>(s));
        auto t0 = std::chrono::steady_clock::now();
        SpectrumReport rep = spectrum_report(res.g, SpectrumOptions{bench_n, 1});
        auto t1 = std::chrono::steady_clock::now();
        rows.push_back(Json{
            {"seed", s},
            {"n", bench_n},
            {"red_lengths", rep.red.lengths.size()},
            {"blue_lengths", rep.blue.lengths.size()},
            {"micros",
             std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()}});
      }
      Json j;
      j["schema"] = "1";
      j["bench"] = "spectrum";
      j["rows"] = rows;
      emit(j);
      return kOk;
    }
  } catch (const refusal_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefusal;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
