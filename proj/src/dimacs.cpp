#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stabset/errors.hpp"
#include "stabset/graph.hpp"

namespace stabset {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t lineno) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Graph parse_dimacs(std::istream& in, bool complement) {
  std::optional<std::uint64_t> n, declared_m;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(lineno, "second problem line");
      // `p col` appears in some benchmark distributions and is read identically.
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      n = to_uint(tok[2], lineno);
      declared_m = to_uint(tok[3], lineno);
      if (*n == 0) throw ParseError(lineno, "vertex count must be positive");
      continue;
    }
    if (tok[0] == "e") {
      if (!n) throw ParseError(lineno, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <i> <j>'");
      auto i = to_uint(tok[1], lineno);
      auto j = to_uint(tok[2], lineno);
      if (i < 1 || i > *n || j < 1 || j > *n)
        throw RangeError("line " + std::to_string(lineno) + ": endpoint outside [1," +
                         std::to_string(*n) + "]");
      if (i == j)
        throw ValidationError("line " + std::to_string(lineno) + ": self-loop at vertex " +
                              std::to_string(i));
      auto u = static_cast<Vertex>(std::min(i, j) - 1);
      auto v = static_cast<Vertex>(std::max(i, j) - 1);
      if (!seen.emplace(u, v).second)
        throw ValidationError("line " + std::to_string(lineno) + ": duplicate edge " +
                              std::to_string(i) + " " + std::to_string(j));
      edges.push_back({u, v});
      continue;
    }
    throw ParseError(lineno, "unrecognised line type '" + std::string(tok[0]) + "'");
  }
  if (!n) throw ParseError(lineno, "missing problem line");
  if (edges.size() != *declared_m)
    throw ValidationError("declared " + std::to_string(*declared_m) + " edges but found " +
                          std::to_string(edges.size()));
  Graph g(static_cast<std::size_t>(*n), std::move(edges));
  return complement ? g.complement() : g;
}

Graph parse_dimacs_string(const std::string& text, bool complement) {
  std::istringstream in(text);
  return parse_dimacs(in, complement);
}

Graph load_dimacs_file(const std::string& path, bool complement) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in, complement);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace stabset
