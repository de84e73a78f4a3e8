#include "cgr/io.hpp"

#include <fstream>
#include <sstream>

namespace cgr {

namespace {

[[noreturn]] void bad_line(int ln, const std::string& what) {
  throw usage_error("line " + std::to_string(ln) + ": " + what);
}

}  // namespace

ColoredGraph parse_graph_stream(std::istream& in) {
  std::string line;
  int ln = 0;
  bool got_header = false;
  long long n = 0, m = 0;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    if (line[0] == 'c') continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (!got_header) {
      std::string fmt;
      if (tag != "p" || !(iss >> fmt >> n >> m) || fmt != "cgraph")
        bad_line(ln, "expected header 'p cgraph <n> <m>'");
      if (n < 0 || m < 0) bad_line(ln, "negative count in header");
      got_header = true;
      continue;
    }
    if (tag != "e") bad_line(ln, "unknown line type '" + tag + "'");
    long long u, v;
    std::string tok;
    if (!(iss >> u >> v >> tok)) bad_line(ln, "malformed edge line");
    if (u < 1 || u > n || v < 1 || v > n)
      bad_line(ln, "vertex out of range (graph has " + std::to_string(n) + " vertices)");
    if (u == v) bad_line(ln, "loop edge");
    EdgeSpec e;
    e.u = static_cast<int>(u - 1);
    e.v = static_cast<int>(v - 1);
    if (tok == "R")
      e.red = true;
    else if (tok == "B")
      e.blue = true;
    else if (tok == "RB")
      e.red = e.blue = true;
    else
      bad_line(ln, "bad color token '" + tok + "'");
    edges.push_back(e);
    if (static_cast<long long>(edges.size()) > m)
      bad_line(ln, "more edge lines than declared");
  }
  if (!got_header) throw usage_error("missing 'p cgraph' header");
  if (static_cast<long long>(edges.size()) != m)
    throw usage_error("declared " + std::to_string(m) + " edges, read " +
                      std::to_string(edges.size()));
  return ColoredGraph::build(static_cast<int>(n), edges);
}

ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_stream(in);
}

ColoredGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return parse_graph_stream(in);
}

std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream out;
  std::vector<EdgeSpec> es = g.edges();
  out << "p cgraph " << g.size() << ' ' << es.size() << '\n';
  for (const EdgeSpec& e : es) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ';
    if (e.red) out << 'R';
    if (e.blue) out << 'B';
    out << '\n';
  }
  return out.str();
}

void save_graph(const ColoredGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << serialize_graph(g);
}

}  // namespace cgr
