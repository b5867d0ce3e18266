#include "stabset/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "stabset/errors.hpp"
#include "stabset/rng.hpp"

namespace stabset {
namespace {

// Stream tags for derive_seed.
constexpr std::uint64_t kReadStream = 1;
constexpr std::uint64_t kProbeStream = 2;
constexpr std::uint64_t kRestartStream = 3;
constexpr std::uint64_t kScheduleStream = 4;

BinaryVector random_state(Rng& rng, std::size_t n) {
  BinaryVector x(n);
  for (auto& b : x) b = static_cast<std::uint8_t>(rng.next() >> 63);
  return x;
}

Sample anneal_one(const QuboInstance& q, const AnnealSchedule& schedule, std::uint64_t seed) {
  const std::size_t n = q.n();
  Rng rng(seed);
  FlipState state(q, random_state(rng, n));

  std::uint32_t max_field = 0;
  for (Vertex v = 0; v < n; ++v) max_field = std::max<std::uint32_t>(max_field, q.neighbors(v).size());
  // Acceptance thresholds scaled to 2^64. Uphill moves: selecting a vertex with h
  // selected neighbours costs 2*beta*h - 1, dropping an unblocked vertex costs 1.
  std::vector<std::uint64_t> add_accept(max_field + 1);
  std::uint64_t drop_accept = 0;
  auto threshold = [](double p) -> std::uint64_t {
    return p >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(p * 0x1.0p64);
  };

  for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
    const double t = schedule.temperature(sweep);
    for (std::uint32_t h = 0; h <= max_field; ++h)
      add_accept[h] = threshold(std::exp(-static_cast<double>(2 * q.beta() * h - 1) / t));
    drop_accept = threshold(std::exp(-1.0 / t));
    for (std::size_t step = 0; step < n; ++step) {
      // One draw per proposal: the high word of r*n is a uniform index and the low
      // word is uniform on [0, 2^64) independently of it.
      auto [i, coin] = rng.split_below(n);
      Energy d = state.delta(static_cast<Vertex>(i));
      if (d <= 0 || coin < (state.x()[i] ? drop_accept : add_accept[state.field(static_cast<Vertex>(i))]))
        state.flip(static_cast<Vertex>(i));
    }
  }
  return make_sample(q, state.x());
}

}  // namespace

double AnnealSchedule::decay() const {
  if (sweeps <= 1) return 1.0;
  return std::pow(t_final / t_initial, 1.0 / static_cast<double>(sweeps - 1));
}

double AnnealSchedule::temperature(std::size_t sweep) const {
  if (sweeps <= 1) return t_final;
  return t_initial * std::pow(decay(), static_cast<double>(sweep));
}

void AnnealSchedule::validate() const {
  if (sweeps < 1) throw ArgumentError("schedule: sweeps must be >= 1");
  if (!(t_final > 0.0) || !(t_initial >= t_final))
    throw ArgumentError("schedule: need t_initial >= t_final > 0");
}

AnnealSchedule default_schedule(const QuboInstance& q, std::uint64_t seed) {
  AnnealSchedule s;
  s.sweeps = kDefaultSweeps;
  s.t_final = kDefaultFinalTemperature;
  if (q.n() == 0) {
    s.t_initial = 1.0;
    return s;
  }
  Rng rng(derive_seed(seed, kProbeStream, 0));
  FlipState state(q, random_state(rng, q.n()));
  std::vector<double> uphill;
  std::size_t downhill = 0;
  for (std::size_t k = 0; k < kProbeFlips; ++k) {
    Energy d = state.delta(static_cast<Vertex>(rng.below(q.n())));
    if (d <= 0)
      ++downhill;
    else
      uphill.push_back(static_cast<double>(d));
  }
  auto acceptance = [&](double t) {
    double a = static_cast<double>(downhill);
    for (double d : uphill) a += std::exp(-d / t);
    return a / static_cast<double>(kProbeFlips);
  };
  double start = 1.0;
  if (!uphill.empty()) {
    double mean = 0.0;
    for (double d : uphill) mean += d;
    mean /= static_cast<double>(uphill.size());
    start = mean;
    if (static_cast<double>(downhill) / kProbeFlips < kTargetInitialAcceptance) {
      // acceptance(t) is increasing in t; bisect on log t.
      double lo = std::log(1e-3), hi = std::log(mean * 1e3);
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (acceptance(std::exp(mid)) < kTargetInitialAcceptance ? lo : hi) = mid;
      }
      start = std::exp(hi);
    }
  }
  s.t_initial = std::max(start, s.t_final);
  return s;
}

FlipState::FlipState(const QuboInstance& q, BinaryVector x)
    : q_(&q), x_(std::move(x)), field_(q.n(), 0) {
  if (x_.size() != q.n()) throw ArgumentError("state length does not match QUBO dimension");
  for (Vertex v = 0; v < q.n(); ++v)
    if (x_[v])
      for (Vertex w : q.neighbors(v)) ++field_[w];
  energy_ = stabset::energy(q, x_);
}

void FlipState::flip(Vertex i) {
  energy_ += delta(i);
  x_[i] ^= 1U;
  if (x_[i])
    for (Vertex w : q_->neighbors(i)) ++field_[w];
  else
    for (Vertex w : q_->neighbors(i)) --field_[w];
}

const Sample& SampleSet::best() const { return samples.at(best_index()); }

std::size_t SampleSet::best_index() const {
  if (samples.empty()) throw ArgumentError("empty sample set");
  std::size_t b = 0;
  for (std::size_t r = 1; r < samples.size(); ++r)
    if (samples[r].energy < samples[b].energy) b = r;
  return b;
}

SampleSet sa_sample(const QuboInstance& q, std::size_t reads, const AnnealSchedule& schedule,
                    std::uint64_t master_seed, unsigned threads) {
  if (reads < 1) throw ArgumentError("reads must be >= 1");
  schedule.validate();
  SampleSet out;
  out.samples.resize(reads);
  out.master_seed = master_seed;
  out.schedule = schedule;
  out.beta = q.beta();

  auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < reads; r += stride)
      out.samples[r] = anneal_one(q, schedule, derive_seed(master_seed, kReadStream, r));
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(reads)));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }
  return out;
}

double feasible_fraction(const SampleSet& s, const Graph& g) {
  if (s.samples.empty()) throw ArgumentError("empty sample set");
  std::size_t stable = 0;
  for (const auto& smp : s.samples)
    if (is_stable(g, smp.x)) ++stable;
  return static_cast<double>(stable) / static_cast<double>(s.samples.size());
}

BinaryVector repair(const Graph& g, BinaryVector x) {
  if (x.size() != g.n()) throw ArgumentError("repair: vector length does not match graph");
  std::vector<std::uint32_t> selected_nb(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (x[v])
      for (Vertex w : g.neighbors(v)) ++selected_nb[w];
  while (true) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!x[v] || selected_nb[v] == 0) continue;
      if (!found || selected_nb[v] > selected_nb[pick] ||
          (selected_nb[v] == selected_nb[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    if (!found) break;
    x[pick] = 0;
    for (Vertex w : g.neighbors(pick)) --selected_nb[w];
  }
  return x;
}

BinaryVector local_improve(const Graph& g, BinaryVector x, std::size_t budget) {
  if (x.size() != g.n()) throw ArgumentError("local_improve: vector length does not match graph");
  if (!is_stable(g, x)) throw ArgumentError("local_improve: input is not a stable set");
  const std::size_t n = g.n();
  std::vector<std::uint32_t> selected_nb(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (x[v])
      for (Vertex w : g.neighbors(v)) ++selected_nb[w];
  auto select = [&](Vertex v) {
    x[v] = 1;
    for (Vertex w : g.neighbors(v)) ++selected_nb[w];
  };
  auto unselect = [&](Vertex v) {
    x[v] = 0;
    for (Vertex w : g.neighbors(v)) --selected_nb[w];
  };

  std::size_t moves = 0;
  std::vector<Vertex> tight;
  while (moves < budget) {
    bool moved = false;
    for (Vertex v = 0; v < n && moves < budget; ++v)
      if (!x[v] && selected_nb[v] == 0) {
        select(v);
        ++moves;
        moved = true;
      }
    if (moved) continue;

    // (1,2)-swap: v selected, a and b free with v as their only selected neighbour.
    for (Vertex v = 0; v < n && !moved && moves < budget; ++v) {
      if (!x[v]) continue;
      tight.clear();
      for (Vertex w : g.neighbors(v))
        if (selected_nb[w] == 1) tight.push_back(w);
      for (std::size_t i = 0; i < tight.size() && !moved; ++i)
        for (std::size_t j = i + 1; j < tight.size(); ++j)
          if (!g.adjacent(tight[i], tight[j])) {
            unselect(v);
            select(tight[i]);
            select(tight[j]);
            ++moves;
            moved = true;
            break;
          }
    }
    if (!moved) break;
  }
  return x;
}

Sample hybrid_solve(const Graph& g, std::int64_t beta, std::uint64_t master_seed,
                    const HybridOptions& options) {
  if (options.reads < 1) throw ArgumentError("hybrid: reads must be >= 1");
  if (options.restarts < 1) throw ArgumentError("hybrid: restarts must be >= 1");
  const QuboInstance q = build_qubo(g, beta);
  std::optional<Sample> best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    const std::uint64_t seed = derive_seed(master_seed, kRestartStream, r);
    AnnealSchedule schedule = options.schedule
                                  ? *options.schedule
                                  : default_schedule(q, derive_seed(master_seed, kScheduleStream, r));
    SampleSet ss = sa_sample(q, options.reads, schedule, seed, options.threads);
    BinaryVector x = local_improve(g, repair(g, ss.best().x), options.improve_budget);
    Sample candidate = make_sample(q, std::move(x));
    if (!best || candidate.cardinality > best->cardinality) best = std::move(candidate);
  }
  return *best;
}

}  // namespace stabset
