#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/samplers.hpp"

namespace stabset {

enum class SolverKind { exact, sa, hybrid };

std::string to_string(SolverKind s);
SolverKind parse_solver(const std::string& s);  ///< throws ArgumentError

struct ExperimentConfig {
  std::vector<std::string> instances;          ///< manifest names or DIMACS paths
  std::vector<std::int64_t> betas{1, 10, 100};
  std::size_t reads = 1000;
  std::size_t restarts = 10;
  std::vector<SolverKind> solvers{SolverKind::exact, SolverKind::sa, SolverKind::hybrid};
  std::uint64_t master_seed = 1;
  std::chrono::duration<double> time_limit = std::chrono::seconds(600);
  unsigned threads = 1;
  std::string data_dir;   ///< empty: default_data_dir()
  bool complement = false;  ///< complement path-given DIMACS files
  std::string csv_path;
  std::string markdown_path;
  std::string samples_path;  ///< JSON-lines dump of every sample, optional

  void validate() const;  ///< throws ArgumentError
};

/// Parses a JSON config whose keys mirror ExperimentConfig: instances, betas, reads,
/// restarts, solvers, seed, time_limit (seconds), threads, data_dir, complement,
/// csv, markdown, samples. Missing keys keep their defaults.
ExperimentConfig parse_config(const std::string& json_text);

/// How a reported best vector compares with the stability number.
enum class CellStatus { not_stable, suboptimal, optimal };

struct ReportRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> alpha;
  bool alpha_proven = false;
  SolverKind solver = SolverKind::exact;
  std::int64_t beta = 1;
  std::size_t best_card = 0;
  BinaryVector best_x;
  bool stable = false;
  bool optimal = false;
  double feasible_frac = 0.0;
  std::size_t reads = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  std::string error;  ///< non-empty when the row could not be produced

  CellStatus status() const;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<SampleSet> sample_sets;  ///< kept only when samples_path is set

  bool has_errors() const;
};

/// Runs every (instance, solver, beta) combination in config order.
///
/// The stable and optimal flags are recomputed from each row's best vector, never
/// taken from solver output. Exact search runs once per instance and is reported
/// under every beta. Rows for instances that fail to load carry an error message
/// and the run continues. Output is deterministic in the config apart from wall_ms.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Recomputes stable/optimal for a row from its best vector and the given graph.
void classify_row(ReportRow& row, const Graph& g);

enum class TableStyle { markdown, csv };

/// csv: header plus one line per row with columns instance, n, m, alpha, solver,
/// beta, best_card, stable, optimal, feasible_frac, reads, seed, wall_ms.
/// markdown: instance x beta grids per solver (best cardinality, `!` = not a stable
/// set, `*` = stable but suboptimal) and a grid of stable-sample percentages for the
/// annealing sampler. Throws ArgumentError for an empty report.
std::string render_tables(const ExperimentReport& report, TableStyle style);

/// One JSON object per sample in every kept sample set, plus one per exact/hybrid row.
std::string render_samples_jsonl(const ExperimentReport& report);

}  // namespace stabset
