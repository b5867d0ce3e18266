#include "stabset/qubo.hpp"

#include <algorithm>
#include <string>

#include "stabset/errors.hpp"

namespace stabset {
namespace {

void check_length(std::size_t n, std::span<const std::uint8_t> x) {
  if (x.size() != n)
    throw ArgumentError("binary vector has length " + std::to_string(x.size()) + ", expected " +
                        std::to_string(n));
}

}  // namespace

QuboInstance::QuboInstance(std::size_t n, std::int64_t beta, std::vector<Edge> couplings)
    : n_(n), beta_(beta) {
  if (beta < 1) throw ArgumentError("penalty weight beta must be >= 1, got " + std::to_string(beta));
  // Reuse the graph constructor for endpoint, self-loop and duplicate validation.
  Graph g(n, std::move(couplings));
  couplings_.assign(g.edges().begin(), g.edges().end());
  offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + g.degree(v);
  targets_.reserve(offsets_[n]);
  for (Vertex v = 0; v < n; ++v)
    targets_.insert(targets_.end(), g.neighbors(v).begin(), g.neighbors(v).end());
}

std::int64_t QuboInstance::entry(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) throw RangeError("QUBO index out of range");
  if (i == j) return -1;
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j) ? beta_ : 0;
}

DenseQubo QuboInstance::dense() const {
  DenseQubo Q = DenseQubo::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
  Q.diagonal().setConstant(-1);
  for (const auto& e : couplings_) {
    Q(e.u, e.v) = beta_;
    Q(e.v, e.u) = beta_;
  }
  return Q;
}

QuboInstance build_qubo(const Graph& g, std::int64_t beta) {
  return QuboInstance(g.n(), beta, std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

std::size_t cardinality(std::span<const std::uint8_t> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](auto b) { return b != 0; }));
}

Energy energy(const QuboInstance& q, std::span<const std::uint8_t> x) {
  check_length(q.n(), x);
  Energy e = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) e -= 1;
  // Each coupling appears twice in the symmetric matrix.
  for (const auto& c : q.couplings())
    if (x[c.u] && x[c.v]) e += 2 * q.beta();
  return e;
}

std::size_t violations(const Graph& g, std::span<const std::uint8_t> x) {
  check_length(g.n(), x);
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if (x[e.u] && x[e.v]) ++c;
  return c;
}

std::size_t violations(const QuboInstance& q, std::span<const std::uint8_t> x) {
  check_length(q.n(), x);
  std::size_t c = 0;
  for (const auto& e : q.couplings())
    if (x[e.u] && x[e.v]) ++c;
  return c;
}

bool is_stable(const Graph& g, std::span<const std::uint8_t> x) { return violations(g, x) == 0; }

bool abs_energy_matches_cardinality(const QuboInstance& q, std::span<const std::uint8_t> x) {
  check_length(q.n(), x);
  Energy card = static_cast<Energy>(cardinality(x));
  Energy e = energy(q, x);
  return card == (e < 0 ? -e : e);
}

Sample make_sample(const QuboInstance& q, BinaryVector x) {
  Sample s;
  s.violations = violations(q, x);
  s.energy = energy(q, x);
  s.cardinality = cardinality(x);
  s.x = std::move(x);
  return s;
}

}  // namespace stabset
