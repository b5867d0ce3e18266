#include "stabset/graph.hpp"

#include <algorithm>
#include <string>

#include "stabset/errors.hpp"

namespace stabset {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_list_(n), adj_rows_(n, VertexSet(n)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw RangeError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} with n=" + std::to_string(n_));
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ValidationError("duplicate edge {" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + "}");
  for (const auto& e : edges_) {
    adj_list_[e.u].push_back(e.v);
    adj_list_[e.v].push_back(e.u);
    adj_rows_[e.u].set(e.v);
    adj_rows_[e.v].set(e.u);
  }
  for (auto& nb : adj_list_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  out.reserve(n_ * (n_ - (n_ ? 1 : 0)) / 2 - m());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.push_back({u, v});
  return Graph(n_, std::move(out));
}

Graph Graph::without_vertex(Vertex x) const {
  if (x >= n_) throw RangeError("vertex out of range");
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (e.u == x || e.v == x) continue;
    out.push_back({e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v});
  }
  return Graph(n_ - 1, std::move(out));
}

}  // namespace stabset
