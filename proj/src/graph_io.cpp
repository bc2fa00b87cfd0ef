#include "paracut/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "paracut/errors.hpp"

namespace paracut {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

long long parse_count(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     tok + "'");
  }
}

BigInt parse_bigint(std::string tok, int line_no) {
  if (tok.starts_with("\xE2\x88\x92")) tok = "-" + tok.substr(3);
  BigInt v;
  if (tok.empty() || v.set_str(tok.starts_with('+') ? tok.substr(1) : tok, 10) != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer cost, got '" +
                     tok + "'");
  }
  return v;
}

}  // namespace

ParamGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, d = 0;
  std::vector<Multigraph<CostVector>::Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (tok.size() != 5 || tok[1] != "pgmc") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must read 'p pgmc <n> <m> <d>'");
      }
      n = parse_count(tok[2], line_no);
      m = parse_count(tok[3], line_no);
      d = parse_count(tok[4], line_no);
      if (n < 1 || m < 0 || d < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid header values");
      }
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) {
        throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      }
      if (tok.size() != static_cast<std::size_t>(d) + 4) {
        throw ParseError("line " + std::to_string(line_no) + ": edge needs " +
                         std::to_string(d + 1) + " cost coefficients");
      }
      long long u = parse_count(tok[1], line_no);
      long long v = parse_count(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
      }
      if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
      CostVector c;
      for (std::size_t i = 3; i < tok.size(); ++i) {
        c.coeffs.push_back(parse_bigint(tok[i], line_no));
      }
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), std::move(c)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tok[0] +
                       "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p pgmc' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return ParamGraph(static_cast<int>(n), static_cast<int>(d), edges);
}

ParamGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const ParamGraph& g) {
  std::ostringstream out;
  const auto& edges = g.graph.original_edges();
  out << "p pgmc " << g.vertex_count() << ' ' << edges.size() << ' ' << g.d << '\n';
  for (const auto& e : edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1;
    for (const auto& c : e.cost.coeffs) out << ' ' << c.get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace paracut
