// stabset: command-line front end for the stable-set QUBO experiments.
//
//   stabset solve --instance paley61 --beta 10 --solver hybrid --out row.csv
//   stabset bench --config bench.json
//   stabset export --instance torus11 --beta 1 --format coordinate
//   stabset instances

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stabset/experiment.hpp"
#include "stabset/qubo_io.hpp"
#include "stabset/registry.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const stabset::ExperimentConfig& cfg, const stabset::ExperimentReport& report) {
  using stabset::TableStyle;
  const std::string csv = stabset::render_tables(report, TableStyle::csv);
  const std::string md = stabset::render_tables(report, TableStyle::markdown);
  write_text(cfg.csv_path, csv);
  if (!cfg.markdown_path.empty()) write_text(cfg.markdown_path, md);
  if (!cfg.samples_path.empty()) write_text(cfg.samples_path, stabset::render_samples_jsonl(report));
  if (!cfg.csv_path.empty() && cfg.markdown_path.empty()) std::cout << md;
  if (report.has_errors()) {
    for (const auto& r : report.rows)
      if (!r.error.empty())
        std::cerr << "error: " << r.instance << " (" << stabset::to_string(r.solver)
                  << ", beta=" << r.beta << "): " << r.error << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable-set QUBO toolkit: exact, annealing and hybrid solvers"};
  app.require_subcommand(1);

  stabset::ExperimentConfig solve_cfg;
  solve_cfg.betas = {1};
  std::string instance, solver = "hybrid";
  std::int64_t beta = 1;
  double time_limit = 600;
  auto* solve = app.add_subcommand("solve", "Run one solver on one instance at one beta");
  solve->add_option("--instance", instance, "Registered instance name or DIMACS file path")->required();
  solve->add_option("--beta", beta, "Penalty weight (integer >= 1)")->capture_default_str();
  solve->add_option("--solver", solver, "exact | sa | hybrid")
      ->check(CLI::IsMember({"exact", "sa", "hybrid"}))
      ->capture_default_str();
  solve->add_option("--reads", solve_cfg.reads, "Annealing reads")->capture_default_str();
  solve->add_option("--restarts", solve_cfg.restarts, "Hybrid restarts")->capture_default_str();
  solve->add_option("--seed", solve_cfg.master_seed, "Master seed")->capture_default_str();
  solve->add_option("--time-limit", time_limit, "Exact search limit in seconds")->capture_default_str();
  solve->add_option("--threads", solve_cfg.threads, "Worker threads for annealing reads")
      ->capture_default_str();
  solve->add_option("--out", solve_cfg.csv_path, "CSV output path (default: stdout)");
  solve->add_option("--markdown", solve_cfg.markdown_path, "Markdown table output path");
  solve->add_option("--samples", solve_cfg.samples_path, "JSON-lines sample dump path");
  solve->add_option("--data-dir", solve_cfg.data_dir, "Directory holding DIMACS instance files");
  solve->add_flag("--complement", solve_cfg.complement,
                  "Complement a DIMACS file given by path (clique-form files)");

  std::string config_path;
  auto* bench = app.add_subcommand("bench", "Run a batch described by a JSON config");
  bench->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string export_instance, export_format = "coordinate", export_out, export_data_dir;
  std::int64_t export_beta = 1;
  auto* exp = app.add_subcommand("export", "Write the QUBO matrix of an instance");
  exp->add_option("--instance", export_instance, "Registered instance name or DIMACS file path")
      ->required();
  exp->add_option("--beta", export_beta, "Penalty weight (integer >= 1)")->capture_default_str();
  exp->add_option("--format", export_format, "coordinate | jsonl")
      ->check(CLI::IsMember({"coordinate", "jsonl"}))
      ->capture_default_str();
  exp->add_option("--out", export_out, "Output path (default: stdout)");
  exp->add_option("--data-dir", export_data_dir, "Directory holding DIMACS instance files");

  auto* list = app.add_subcommand("instances", "List the registered benchmark instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      solve_cfg.instances = {instance};
      solve_cfg.betas = {beta};
      solve_cfg.solvers = {stabset::parse_solver(solver)};
      solve_cfg.time_limit = std::chrono::duration<double>(time_limit);
      return emit(solve_cfg, stabset::run_experiment(solve_cfg));
    }
    if (*bench) {
      auto cfg = stabset::parse_config(read_text(config_path));
      return emit(cfg, stabset::run_experiment(cfg));
    }
    if (*exp) {
      auto inst = stabset::load_instance(export_instance, export_data_dir);
      auto q = stabset::build_qubo(inst.graph, export_beta);
      auto fmt = export_format == "jsonl" ? stabset::QuboFormat::json_lines
                                          : stabset::QuboFormat::coordinate;
      write_text(export_out, stabset::export_qubo(q, fmt));
      return 0;
    }
    if (*list) {
      const auto dir = stabset::default_data_dir();
      for (const auto& e : stabset::instance_manifest())
        std::cout << e.name << "\tn=" << e.n << "\tm=" << e.m << "\talpha=" << e.alpha << '\t'
                  << (e.source == stabset::InstanceSource::generator ? "generated"
                                                                       : "file in " + dir)
                  << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
