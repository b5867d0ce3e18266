#include "stabset/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "stabset/errors.hpp"
#include "stabset/vertex_set.hpp"

namespace stabset {
namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Brute-force enumeration

class Enumerator {
public:
  explicit Enumerator(const Graph& g) : g_(g), blocked_(g.n(), 0) {}

  void run() { visit(0); }

  std::size_t best = 0;
  std::vector<Vertex> best_set;
  std::uint64_t nodes = 0;

private:
  void visit(Vertex i) {
    ++nodes;
    if (chosen_.size() > best) {
      best = chosen_.size();
      best_set = chosen_;
    }
    if (i == g_.n() || chosen_.size() + (g_.n() - i) <= best) return;
    if (blocked_[i] == 0) {
      chosen_.push_back(i);
      for (auto w : g_.neighbors(i)) ++blocked_[w];
      visit(i + 1);
      for (auto w : g_.neighbors(i)) --blocked_[w];
      chosen_.pop_back();
    }
    visit(i + 1);
  }

  const Graph& g_;
  std::vector<std::uint32_t> blocked_;
  std::vector<Vertex> chosen_;
};

// ---------------------------------------------------------------------------
// Branch and bound

class Search {
public:
  Search(const Graph& g, Clock::time_point deadline)
      : g_(g), n_(g.n()), deadline_(deadline), dist_(g.n(), -1), parent_(g.n(), 0),
        color_(g.n(), -1), match_(g.n(), kNone), seen_(g.n(), 0) {}

  void seed_incumbent() {
    VertexSet p = VertexSet::full(n_);
    std::vector<Vertex> chosen;
    while (!p.empty()) {
      std::size_t best_v = n_, best_d = std::numeric_limits<std::size_t>::max();
      p.for_each([&](std::size_t v) {
        std::size_t d = g_.neighbor_set(static_cast<Vertex>(v)).intersect_count(p);
        if (d < best_d) best_d = d, best_v = v;
      });
      chosen.push_back(static_cast<Vertex>(best_v));
      p -= g_.neighbor_set(static_cast<Vertex>(best_v));
      p.reset(best_v);
    }
    best_ = chosen.size();
    best_set_ = std::move(chosen);
  }

  std::size_t root_bound() {
    VertexSet all = VertexSet::full(n_);
    const std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    return std::min(clique_cover(all, unlimited), cycle_cover(all, unlimited));
  }

  void run() { expand(VertexSet::full(n_)); }

  std::size_t best_ = 0;
  std::vector<Vertex> best_set_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;

private:
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  static constexpr std::size_t kSimplicialDegree = 16;

  const VertexSet& adj(std::size_t v) const { return g_.neighbor_set(static_cast<Vertex>(v)); }

  bool is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t u) {
      if (!ok) return;
      VertexSet rest = s;
      rest.reset(u);
      if (!rest.is_subset_of(adj(u))) ok = false;
    });
    return ok;
  }

  // Takes degree <= 1 and simplicial vertices; each belongs to some maximum stable set of G[p].
  void reduce(VertexSet& p) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = p.first(); v < n_; v = p.next(v + 1)) {
        std::size_t d = adj(v).intersect_count(p);
        if (d <= 1 || (d <= kSimplicialDegree && is_clique(adj(v) & p))) {
          chosen_.push_back(static_cast<Vertex>(v));
          p -= adj(v);
          p.reset(v);
          changed = true;
        }
      }
    }
  }

  void record() {
    if (chosen_.size() > best_) {
      best_ = chosen_.size();
      best_set_ = chosen_;
    }
  }

  void expand(VertexSet p) {
    if (timed_out_) return;
    if ((++nodes_ & 1023U) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    const std::size_t mark = chosen_.size();
    reduce(p);
    record();
    const std::size_t need = best_ + 1 - chosen_.size();  // alpha(G[p]) must reach this
    if (p.count() < need || clique_cover(p, need) < need || cycle_cover(p, need) < need) {
      chosen_.resize(mark);
      return;
    }

    std::size_t v = n_, max_d = 0;
    p.for_each([&](std::size_t u) {
      std::size_t d = adj(u).intersect_count(p);
      if (v == n_ || d > max_d) v = u, max_d = d;
    });

    chosen_.push_back(static_cast<Vertex>(v));
    expand(p - adj(v) - single(v));
    chosen_.pop_back();
    p.reset(v);
    expand(std::move(p));
    chosen_.resize(mark);
  }

  VertexSet single(std::size_t v) const {
    VertexSet s(n_);
    s.set(v);
    return s;
  }

  // Greedy partition of u into cliques, scanning vertices in index order. Stops
  // counting once `limit` is reached.
  std::size_t clique_cover(VertexSet u, std::size_t limit) const {
    std::size_t count = 0;
    while (!u.empty()) {
      if (++count >= limit) return count;
      std::size_t v = u.first();
      u.reset(v);
      VertexSet common = adj(v) & u;
      while (!common.empty()) {
        std::size_t w = common.first();
        u.reset(w);
        common &= adj(w);
      }
    }
    return count;
  }

  // BFS in G[u] from s; returns the first odd closed walk found as a vertex list, or
  // empty when none passes through the BFS tree rooted at s.
  std::vector<Vertex> odd_cycle_from(std::size_t s, const VertexSet& u) {
    std::vector<Vertex> touched{static_cast<Vertex>(s)};
    std::vector<Vertex> level{static_cast<Vertex>(s)}, next;
    dist_[s] = 0;
    Vertex hit_a = kNone, hit_b = kNone;
    for (int depth = 0; !level.empty() && hit_a == kNone; ++depth) {
      next.clear();
      for (Vertex a : level) {
        VertexSet nb = adj(a) & u;
        for (std::size_t b = nb.first(); b < n_; b = nb.next(b + 1)) {
          if (dist_[b] == depth) {
            hit_a = a, hit_b = static_cast<Vertex>(b);
            break;
          }
          if (dist_[b] < 0) {
            dist_[b] = depth + 1;
            parent_[b] = a;
            next.push_back(static_cast<Vertex>(b));
            touched.push_back(static_cast<Vertex>(b));
          }
        }
        if (hit_a != kNone) break;
      }
      level.swap(next);
    }
    std::vector<Vertex> cycle;
    if (hit_a != kNone) {
      for (Vertex x = hit_a; x != s; x = parent_[x]) cycle.push_back(x);
      cycle.push_back(static_cast<Vertex>(s));
      std::vector<Vertex> other;
      for (Vertex x = hit_b; x != s; x = parent_[x]) other.push_back(x);
      cycle.insert(cycle.end(), other.rbegin(), other.rend());
    }
    for (Vertex t : touched) dist_[t] = -1;
    return cycle;
  }

  bool is_chordless_cycle(const std::vector<Vertex>& cycle) const {
    VertexSet s(n_);
    for (Vertex v : cycle) s.set(v);
    if (s.count() != cycle.size()) return false;
    for (Vertex v : cycle)
      if (adj(v).intersect_count(s) != 2) return false;
    return true;
  }

  // Stability number of a bipartite G[r] via Koenig: |r| - maximum matching.
  // Returns nullopt-like max() when G[r] is not bipartite.
  std::size_t bipartite_alpha(const VertexSet& r) {
    std::vector<Vertex> left;
    bool bipartite = true;
    r.for_each([&](std::size_t s) {
      if (!bipartite || color_[s] >= 0) return;
      std::vector<Vertex> stack{static_cast<Vertex>(s)};
      color_[s] = 0;
      while (!stack.empty() && bipartite) {
        Vertex a = stack.back();
        stack.pop_back();
        if (color_[a] == 0) left.push_back(a);
        (adj(a) & r).for_each([&](std::size_t b) {
          if (color_[b] < 0) {
            color_[b] = 1 - color_[a];
            stack.push_back(static_cast<Vertex>(b));
          } else if (color_[b] == color_[a]) {
            bipartite = false;
          }
        });
      }
    });
    std::size_t result = std::numeric_limits<std::size_t>::max();
    if (bipartite) {
      std::size_t matched = 0;
      for (Vertex a : left) {
        ++stamp_;
        if (augment(a, r)) ++matched;
      }
      result = r.count() - matched;
    }
    r.for_each([&](std::size_t v) {
      color_[v] = -1;
      match_[v] = kNone;
    });
    return result;
  }

  bool augment(Vertex a, const VertexSet& r) {
    for (std::size_t b = adj(a).next(0); b < n_; b = adj(a).next(b + 1)) {
      if (!r.test(b) || seen_[b] == stamp_) continue;
      seen_[b] = stamp_;
      if (match_[b] == kNone || augment(match_[b], r)) {
        match_[b] = a;
        return true;
      }
    }
    return false;
  }

  // Partition u into cliques grown from triangles, chordless odd cycles and a
  // remainder; each part bounds its share of any stable set. Stops at `limit`.
  std::size_t cycle_cover(VertexSet u, std::size_t limit) {
    std::size_t total = 0;
    for (std::size_t s = u.first(); s < n_; s = u.next(s + 1)) {
      auto cycle = odd_cycle_from(s, u);
      if (cycle.empty() || !is_chordless_cycle(cycle)) continue;
      if (cycle.size() == 3) {
        VertexSet common = u;
        for (Vertex v : cycle) {
          common &= adj(v);
          u.reset(v);
        }
        while (!common.empty()) {
          std::size_t w = common.first();
          u.reset(w);
          common &= adj(w);
        }
        total += 1;
      } else {
        for (Vertex v : cycle) u.reset(v);
        total += (cycle.size() - 1) / 2;
      }
      if (total >= limit) return total;
    }
    std::size_t rest = bipartite_alpha(u);
    if (rest == std::numeric_limits<std::size_t>::max()) rest = clique_cover(u, limit);
    return total + rest;
  }

  const Graph& g_;
  std::size_t n_;
  Clock::time_point deadline_;
  std::vector<Vertex> chosen_;
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
  std::vector<int> color_;
  std::vector<Vertex> match_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
};

BinaryVector indicator(std::size_t n, const std::vector<Vertex>& set) {
  BinaryVector x(n, 0);
  for (Vertex v : set) x[v] = 1;
  return x;
}

}  // namespace

ExactResult brute_force_alpha(const Graph& g, std::size_t max_n) {
  if (g.n() > max_n)
    throw BudgetError("brute force refused: n=" + std::to_string(g.n()) + " exceeds budget " +
                      std::to_string(max_n));
  auto start = Clock::now();
  Enumerator e(g);
  e.run();
  ExactResult r;
  r.alpha = e.best;
  r.witness = indicator(g.n(), e.best_set);
  r.upper_bound = e.best;
  r.proven = true;
  r.nodes_explored = e.nodes;
  r.elapsed = Clock::now() - start;
  return r;
}

ExactResult branch_and_bound(const Graph& g, const BranchAndBoundOptions& options) {
  auto start = Clock::now();
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(options.time_limit);
  ExactResult r;
  if (g.n() == 0) {
    r.proven = true;
    return r;
  }
  Search search(g, deadline);
  search.seed_incumbent();
  std::size_t root = search.root_bound();
  search.run();
  r.alpha = search.best_;
  r.witness = indicator(g.n(), search.best_set_);
  r.proven = !search.timed_out_;
  r.upper_bound = r.proven ? r.alpha : std::max(root, r.alpha);
  r.nodes_explored = search.nodes_;
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace stabset
