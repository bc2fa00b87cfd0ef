#pragma once

#include <string>
#include <string_view>

#include "paracut/pgraph.hpp"

namespace paracut {

// Text instance format ('#' starts a comment):
//   p pgmc <n> <m> <d>
//   e <u> <v> <c0> <c1> ... <cd>     (m lines, vertices 1..n)
// Duplicate vertex pairs are merged by summing their cost vectors.
ParamGraph parse_graph(std::string_view text);
ParamGraph read_graph_file(const std::string& path);

// Canonical text form: merged edges in (u, v) order.
std::string serialize_graph(const ParamGraph& g);

}  // namespace paracut
