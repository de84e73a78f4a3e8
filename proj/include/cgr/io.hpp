#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cgr/graph.hpp"

namespace cgr {

// Colored edge-list text format:
//   c <comment>            ignored
//   p cgraph <n> <m>       exactly once, first non-comment line
//   e <u> <v> <R|B|RB>     m lines, 1-indexed, u != v
// Serialization emits edges in ascending (u,v) order with u < v and the
// colorset token fixed as R, B, or RB.
ColoredGraph parse_graph(std::string_view text);
ColoredGraph parse_graph_stream(std::istream& in);
ColoredGraph load_graph(const std::string& path);

std::string serialize_graph(const ColoredGraph& g);
void save_graph(const ColoredGraph& g, const std::string& path);

}  // namespace cgr
