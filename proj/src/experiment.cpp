#include "stabset/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include <json.hpp>

#include "stabset/errors.hpp"
#include "stabset/exact.hpp"
#include "stabset/qubo.hpp"
#include "stabset/registry.hpp"
#include "stabset/rng.hpp"

namespace stabset {

std::string to_string(SolverKind s) {
  switch (s) {
    case SolverKind::exact: return "exact";
    case SolverKind::sa: return "sa";
    case SolverKind::hybrid: return "hybrid";
  }
  return "?";
}

SolverKind parse_solver(const std::string& s) {
  if (s == "exact") return SolverKind::exact;
  if (s == "sa") return SolverKind::sa;
  if (s == "hybrid") return SolverKind::hybrid;
  throw ArgumentError("unknown solver '" + s + "' (expected exact, sa or hybrid)");
}

void ExperimentConfig::validate() const {
  if (instances.empty()) throw ArgumentError("config: at least one instance required");
  if (solvers.empty()) throw ArgumentError("config: at least one solver required");
  if (betas.empty()) throw ArgumentError("config: at least one beta required");
  for (auto b : betas)
    if (b < 1) throw ArgumentError("config: every beta must be >= 1");
  if (reads < 1) throw ArgumentError("config: reads must be >= 1");
  if (restarts < 1) throw ArgumentError("config: restarts must be >= 1");
  if (!(time_limit.count() > 0)) throw ArgumentError("config: time_limit must be positive");
}

ExperimentConfig parse_config(const std::string& json_text) {
  ExperimentConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config: expected a JSON object");
  static const std::vector<std::string> known{"instances", "betas",    "reads",      "restarts",
                                              "solvers",   "seed",     "time_limit", "threads",
                                              "data_dir",  "complement", "csv",      "markdown",
                                              "samples"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ArgumentError("config: unknown key '" + key + "'");
  try {
    if (j.contains("instances")) cfg.instances = j["instances"].get<std::vector<std::string>>();
    if (j.contains("betas")) cfg.betas = j["betas"].get<std::vector<std::int64_t>>();
    if (j.contains("reads")) cfg.reads = j["reads"].get<std::size_t>();
    if (j.contains("restarts")) cfg.restarts = j["restarts"].get<std::size_t>();
    if (j.contains("solvers")) {
      cfg.solvers.clear();
      for (const auto& s : j["solvers"]) cfg.solvers.push_back(parse_solver(s.get<std::string>()));
    }
    if (j.contains("seed")) cfg.master_seed = j["seed"].get<std::uint64_t>();
    if (j.contains("time_limit"))
      cfg.time_limit = std::chrono::duration<double>(j["time_limit"].get<double>());
    if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
    if (j.contains("data_dir")) cfg.data_dir = j["data_dir"].get<std::string>();
    if (j.contains("complement")) cfg.complement = j["complement"].get<bool>();
    if (j.contains("csv")) cfg.csv_path = j["csv"].get<std::string>();
    if (j.contains("markdown")) cfg.markdown_path = j["markdown"].get<std::string>();
    if (j.contains("samples")) cfg.samples_path = j["samples"].get<std::string>();
  } catch (const nlohmann::json::type_error& e) {
    throw ArgumentError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

CellStatus ReportRow::status() const {
  if (!stable) return CellStatus::not_stable;
  return optimal ? CellStatus::optimal : CellStatus::suboptimal;
}

bool ExperimentReport::has_errors() const {
  for (const auto& r : rows)
    if (!r.error.empty()) return true;
  return false;
}

void classify_row(ReportRow& row, const Graph& g) {
  row.best_card = cardinality(row.best_x);
  row.stable = is_stable(g, row.best_x);
  row.optimal = row.stable && row.alpha && row.best_card == *row.alpha;
}

namespace {

constexpr std::uint64_t kRowStream = 11;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report;
  const bool keep_samples = !cfg.samples_path.empty();

  for (std::size_t inst = 0; inst < cfg.instances.size(); ++inst) {
    const std::string& name = cfg.instances[inst];
    LoadedInstance loaded;
    try {
      loaded = load_instance(name, cfg.data_dir, cfg.complement);
    } catch (const std::exception& e) {
      for (auto solver : cfg.solvers)
        for (auto beta : cfg.betas) {
          ReportRow row;
          row.instance = name;
          row.solver = solver;
          row.beta = beta;
          row.error = e.what();
          report.rows.push_back(std::move(row));
        }
      continue;
    }
    const Graph& g = loaded.graph;

    // Stability number: exact search when requested, else the manifest, else a
    // bounded exact search so optimality can still be judged.
    std::optional<ExactResult> exact;
    double exact_ms = 0.0;
    const bool want_exact =
        std::find(cfg.solvers.begin(), cfg.solvers.end(), SolverKind::exact) != cfg.solvers.end();
    if (want_exact || !loaded.known_alpha) {
      auto t0 = std::chrono::steady_clock::now();
      exact = branch_and_bound(g, {cfg.time_limit});
      exact_ms = ms_since(t0);
    }
    std::optional<std::size_t> alpha = loaded.known_alpha;
    bool alpha_proven = false;
    std::string alpha_error;
    if (exact && exact->proven) {
      if (alpha && *alpha != exact->alpha)
        alpha_error = "exact search found alpha=" + std::to_string(exact->alpha) +
                      " but the manifest lists " + std::to_string(*alpha);
      alpha = exact->alpha;
      alpha_proven = true;
    } else if (exact && !alpha) {
      alpha = exact->alpha;
    }

    for (auto solver : cfg.solvers) {
      for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi) {
        const std::int64_t beta = cfg.betas[bi];
        ReportRow row;
        row.instance = loaded.name;
        row.n = g.n();
        row.m = g.m();
        row.alpha = alpha;
        row.alpha_proven = alpha_proven;
        row.solver = solver;
        row.beta = beta;
        row.error = alpha_error;
        row.seed = derive_seed(cfg.master_seed, kRowStream,
                               (inst << 24) ^ (static_cast<std::uint64_t>(beta) << 4) ^
                                   static_cast<std::uint64_t>(solver));
        auto t0 = std::chrono::steady_clock::now();
        switch (solver) {
          case SolverKind::exact: {
            row.best_x = exact->witness;
            row.feasible_frac = is_stable(g, row.best_x) ? 1.0 : 0.0;
            row.reads = 0;
            row.seed = 0;
            break;
          }
          case SolverKind::sa: {
            const QuboInstance q = build_qubo(g, beta);
            SampleSet ss = sa_sample(q, cfg.reads, default_schedule(q, row.seed), row.seed, cfg.threads);
            ss.instance_id = loaded.name;
            row.best_x = ss.best().x;
            row.feasible_frac = feasible_fraction(ss, g);
            row.reads = cfg.reads;
            if (keep_samples) report.sample_sets.push_back(std::move(ss));
            break;
          }
          case SolverKind::hybrid: {
            HybridOptions opts;
            opts.reads = cfg.reads;
            opts.restarts = cfg.restarts;
            opts.threads = cfg.threads;
            Sample s = hybrid_solve(g, beta, row.seed, opts);
            row.best_x = s.x;
            row.feasible_frac = is_stable(g, row.best_x) ? 1.0 : 0.0;
            row.reads = cfg.reads;
            break;
          }
        }
        row.wall_ms = solver == SolverKind::exact ? exact_ms : ms_since(t0);
        classify_row(row, g);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace stabset
