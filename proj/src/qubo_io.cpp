#include "stabset/qubo_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabset/errors.hpp"

namespace stabset {
namespace {

struct Entry {
  std::int64_t i, j, w;
};

QuboInstance from_entries(std::int64_t n, std::int64_t nnz, const std::vector<Entry>& entries) {
  if (n < 0) throw ValidationError("negative dimension");
  if (static_cast<std::int64_t>(entries.size()) != nnz)
    throw ValidationError("header declares " + std::to_string(nnz) + " entries, found " +
                          std::to_string(entries.size()));
  std::vector<bool> diag(static_cast<std::size_t>(n), false);
  std::vector<Edge> couplings;
  std::int64_t weight = 0;
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) throw RangeError("QUBO index out of range");
    if (e.i > e.j) throw ValidationError("entry below the diagonal");
    if (e.i == e.j) {
      if (e.w != -1) throw ValidationError("diagonal weight must be -1");
      if (diag[static_cast<std::size_t>(e.i)]) throw ValidationError("repeated diagonal entry");
      diag[static_cast<std::size_t>(e.i)] = true;
      continue;
    }
    if (weight == 0) weight = e.w;
    if (e.w != weight || e.w < 2 || e.w % 2 != 0)
      throw ValidationError("off-diagonal weights must all equal 2*beta with integer beta >= 1");
    couplings.push_back({static_cast<Vertex>(e.i), static_cast<Vertex>(e.j)});
  }
  for (bool d : diag)
    if (!d) throw ValidationError("missing diagonal entry");
  return QuboInstance(static_cast<std::size_t>(n), weight == 0 ? 1 : weight / 2, std::move(couplings));
}

std::int64_t to_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

std::string export_qubo(const QuboInstance& q, QuboFormat format) {
  const std::size_t nnz = q.n() + q.couplings().size();
  const std::int64_t w = 2 * q.beta();
  std::ostringstream out;
  if (format == QuboFormat::coordinate) {
    out << q.n() << ' ' << nnz;
    for (std::size_t i = 0; i < q.n(); ++i) out << '\n' << i << ' ' << i << " -1";
    for (const auto& c : q.couplings()) out << '\n' << c.u << ' ' << c.v << ' ' << w;
    return out.str();
  }
  out << nlohmann::json{{"n", q.n()}, {"nnz", nnz}}.dump() << '\n';
  for (std::size_t i = 0; i < q.n(); ++i)
    out << nlohmann::json{{"i", i}, {"j", i}, {"w", -1}}.dump() << '\n';
  for (const auto& c : q.couplings())
    out << nlohmann::json{{"i", c.u}, {"j", c.v}, {"w", w}}.dump() << '\n';
  return out.str();
}

QuboInstance import_qubo(const std::string& text, QuboFormat format) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::int64_t n = -1, nnz = -1;
  std::vector<Entry> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (format == QuboFormat::coordinate) {
      auto tok = tokens(line);
      if (tok.empty()) continue;
      if (n < 0) {
        if (tok.size() != 2) throw ParseError(lineno, "expected header 'n nnz'");
        n = to_int(tok[0], lineno);
        nnz = to_int(tok[1], lineno);
      } else {
        if (tok.size() != 3) throw ParseError(lineno, "expected 'i j w'");
        entries.push_back({to_int(tok[0], lineno), to_int(tok[1], lineno), to_int(tok[2], lineno)});
      }
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      if (n < 0) {
        n = j.at("n").get<std::int64_t>();
        nnz = j.at("nnz").get<std::int64_t>();
      } else {
        entries.push_back({j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>(),
                           j.at("w").get<std::int64_t>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  return from_entries(n, nnz, entries);
}

}  // namespace stabset
