#include "cgr/json_out.hpp"

namespace cgr {

namespace {

Json one_based(const std::vector<int>& vs) {
  Json arr = Json::array();
  for (int v : vs) arr.push_back(v + 1);
  return arr;
}

Json one_based(Vmask m) {
  Json arr = Json::array();
  for (; m; m &= m - 1) arr.push_back(first_vertex(m) + 1);
  return arr;
}

std::vector<int> zero_based(const Json& arr) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(v.get<int>() - 1);
  return out;
}

Vmask mask_from(const Json& arr) {
  Vmask m = 0;
  for (const auto& v : arr) m |= bit(v.get<int>() - 1);
  return m;
}

std::string color_token(Color c) { return std::string(1, color_char(c)); }

Color color_from(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "R" || s == "Red" || s == "red") return Color::Red;
  if (s == "B" || s == "Blue" || s == "blue") return Color::Blue;
  throw usage_error("bad color token in JSON: " + s);
}

Delta delta_from(const Json& j) {
  auto d = Delta::parse(j.get<std::string>());
  if (!d) throw usage_error("bad delta in JSON");
  return *d;
}

}  // namespace

Json cert_json(const CycleCertificate& c) {
  return Json{{"type", "cycle"},
              {"color", color_token(c.color)},
              {"len", c.length()},
              {"vertices", one_based(c.vertices)}};
}

Json cert_json(const PathCertificate& p) {
  return Json{{"type", "path"},
              {"color", color_token(p.color)},
              {"len", p.length()},
              {"vertices", one_based(p.vertices)}};
}

Json cert_json(const Matching& m) {
  Json edges = Json::array();
  for (auto [u, v] : m.edges) edges.push_back(Json::array({u + 1, v + 1}));
  return Json{{"type", "matching"},
              {"color", color_token(m.color)},
              {"size", m.size()},
              {"edges", edges}};
}

Json spectrum_json(const SpectrumReport& rep, const TheoremVerdict* verdict) {
  Json j;
  j["schema"] = "1";
  j["n"] = rep.n;
  j["red"] = rep.red.lengths;
  j["blue"] = rep.blue.lengths;
  if (rep.circumference) {
    j["circumference"] = Json{{"len", rep.circumference->length},
                              {"color", color_token(rep.circumference->color)},
                              {"cycle", one_based(rep.circumference->cert.vertices)}};
  } else {
    j["circumference"] = nullptr;
  }
  j["exact"] = rep.exact;
  if (verdict) {
    j["verdict"] = Json{{"holds", verdict->holds},
                        {"branch", branch_string(*verdict)},
                        {"missing", verdict->missing},
                        {"t", verdict->t},
                        {"r", verdict->r}};
  }
  return j;
}

Json arrows_json(const ArrowsResult& res, int len) {
  Json j;
  j["schema"] = "1";
  j["len"] = len;
  j["arrows"] = res.kind == ArrowsResult::Yes  ? "yes"
                : res.kind == ArrowsResult::No ? "no"
                                               : "budget-exceeded";
  j["colorings_checked"] = res.colorings_checked;
  return j;
}

Json witness_json(const SparseSetWitness& w) {
  return Json{{"L", one_based(w.L)},
              {"sparse_color", color_token(w.sparse_color)},
              {"delta", w.delta.str()}};
}

Json witness_json(const PartitionWitness& w) {
  return Json{{"U1", one_based(w.U[0])}, {"U2", one_based(w.U[1])},
              {"U3", one_based(w.U[2])}, {"U4", one_based(w.U[3])},
              {"V0", one_based(w.V0)},   {"XR", one_based(w.XR)},
              {"XB", one_based(w.XB)},   {"delta", w.delta.str()}};
}

Json structure_json(const GlueStructure& s) {
  return Json{{"color", color_token(s.color)},
              {"kind", s.kind},
              {"c1", one_based(s.c1)},
              {"c2", one_based(s.c2)}};
}

SparseSetWitness sparse_witness_from_json(const Json& j) {
  SparseSetWitness w;
  w.L = mask_from(j.at("L"));
  w.sparse_color = color_from(j.at("sparse_color"));
  w.delta = delta_from(j.at("delta"));
  return w;
}

PartitionWitness partition_witness_from_json(const Json& j) {
  PartitionWitness w;
  const char* keys[4] = {"U1", "U2", "U3", "U4"};
  for (int i = 0; i < 4; ++i) w.U[i] = mask_from(j.at(keys[i]));
  if (j.contains("V0")) w.V0 = mask_from(j.at("V0"));
  if (j.contains("XR")) w.XR = mask_from(j.at("XR"));
  if (j.contains("XB")) w.XB = mask_from(j.at("XB"));
  w.delta = delta_from(j.at("delta"));
  return w;
}

GlueStructure structure_from_json(const Json& j) {
  GlueStructure s;
  s.color = color_from(j.at("color"));
  s.kind = j.value("kind", "");
  s.c1 = zero_based(j.at("c1"));
  s.c2 = zero_based(j.at("c2"));
  return s;
}

Json stability_json(const StabilityCase& sc) {
  Json j;
  j["schema"] = "1";
  j["case"] = stability_kind_name(sc.kind);
  switch (sc.kind) {
    case StabilityCase::ConnectedMatching:
      j["color"] = color_token(sc.color);
      j["component"] = one_based(sc.component);
      j["matching"] = cert_json(sc.matching);
      break;
    case StabilityCase::SparseSet:
      j["witness"] = witness_json(*sc.sparse);
      break;
    case StabilityCase::FourPart:
      j["witness"] = witness_json(*sc.partition);
      break;
    case StabilityCase::NoneFound:
      break;
  }
  return j;
}

Json pipeline_json(const PipelineReport& rep) {
  Json j;
  j["schema"] = "1";
  j["case"] = rep.case_taken;
  j["notes"] = rep.notes;
  Json lens = Json::array();
  for (const LengthOutcome& lo : rep.lengths) {
    Json e;
    e["length"] = lo.length;
    e["status"] = lo.found() ? "found" : "infeasible";
    if (!lo.route.empty()) e["route"] = lo.route;
    if (lo.found()) e["certificate"] = cert_json(*lo.cert);
    if (!lo.note.empty()) e["note"] = lo.note;
    lens.push_back(e);
  }
  j["lengths"] = lens;
  j["all_found"] = rep.all_found();
  return j;
}

Json expectations_json(const Expectations& e) {
  Json j = Json::object();
  if (e.min_degree) j["min_degree"] = *e.min_degree;
  if (e.circumference) j["circumference"] = *e.circumference;
  if (e.circumference_max) j["circumference_max"] = *e.circumference_max;
  if (e.verdict_branch) j["verdict_branch"] = *e.verdict_branch;
  if (e.red_lengths) j["red_lengths"] = *e.red_lengths;
  if (e.blue_lengths) j["blue_lengths"] = *e.blue_lengths;
  if (e.absent_length) j["absent_length"] = *e.absent_length;
  if (e.no_mono_cycles) j["no_mono_cycles"] = true;
  return j;
}

std::vector<AnyCertificate> collect_certificates(const Json& j) {
  std::vector<AnyCertificate> out;
  if (j.is_object()) {
    if (j.contains("type") && j["type"].is_string()) {
      std::string t = j["type"];
      if (t == "cycle") {
        AnyCertificate c{AnyCertificate::Cycle, {}, {}, {}};
        c.cycle.vertices = zero_based(j.at("vertices"));
        c.cycle.color = color_from(j.at("color"));
        out.push_back(c);
        return out;
      }
      if (t == "path") {
        AnyCertificate c{AnyCertificate::Path, {}, {}, {}};
        c.path.vertices = zero_based(j.at("vertices"));
        c.path.color = color_from(j.at("color"));
        out.push_back(c);
        return out;
      }
      if (t == "matching") {
        AnyCertificate c{AnyCertificate::Match, {}, {}, {}};
        c.matching.color = color_from(j.at("color"));
        for (const auto& e : j.at("edges"))
          c.matching.edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1});
        out.push_back(c);
        return out;
      }
    }
    for (const auto& [k, v] : j.items()) {
      (void)k;
      auto sub = collect_certificates(v);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      auto sub = collect_certificates(v);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

}  // namespace cgr
