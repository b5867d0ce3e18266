#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabset/errors.hpp"
#include "stabset/experiment.hpp"

namespace stabset {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string cell(const ReportRow& r) {
  if (!r.error.empty()) return "error";
  std::string s = std::to_string(r.best_card);
  switch (r.status()) {
    case CellStatus::not_stable: return s + "!";
    case CellStatus::suboptimal: return s + "*";
    case CellStatus::optimal: return s;
  }
  return s;
}

template <class T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::string render_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "instance,n,m,alpha,solver,beta,best_card,stable,optimal,feasible_frac,reads,seed,wall_ms\n";
  for (const auto& r : report.rows) {
    out << csv_field(r.instance) << ',';
    if (r.error.empty()) {
      out << r.n << ',' << r.m << ',' << (r.alpha ? std::to_string(*r.alpha) : std::string()) << ','
          << to_string(r.solver) << ',' << r.beta << ',' << r.best_card << ','
          << (r.stable ? "true" : "false") << ',' << (r.optimal ? "true" : "false") << ','
          << fixed(r.feasible_frac, 6) << ',' << r.reads << ',' << r.seed << ','
          << fixed(r.wall_ms, 1) << '\n';
    } else {
      out << ",,," << to_string(r.solver) << ',' << r.beta << ",,false,false,,,,\n";
    }
  }
  return out.str();
}

std::string render_markdown(const ExperimentReport& report) {
  std::vector<std::string> instances;
  std::vector<std::int64_t> betas;
  std::vector<SolverKind> solvers;
  std::map<std::tuple<std::string, SolverKind, std::int64_t>, const ReportRow*> index;
  std::map<std::string, const ReportRow*> info;
  for (const auto& r : report.rows) {
    push_unique(instances, r.instance);
    push_unique(betas, r.beta);
    push_unique(solvers, r.solver);
    index[{r.instance, r.solver, r.beta}] = &r;
    if (!info.count(r.instance) || (info[r.instance]->error.size() && r.error.empty()))
      info[r.instance] = &r;
  }

  std::ostringstream out;
  auto header = [&](bool with_graph_info) {
    out << "| Graph |";
    if (with_graph_info) out << " n | m | alpha(G) |";
    for (auto b : betas) out << " beta = " << b << " |";
    out << "\n|---|";
    if (with_graph_info) out << "---:|---:|---:|";
    for (std::size_t k = 0; k < betas.size(); ++k) out << "---:|";
    out << '\n';
  };
  auto graph_info = [&](const std::string& name) {
    const ReportRow* r = info[name];
    if (!r->error.empty()) return std::string(" | | |");
    std::string a = r->alpha ? std::to_string(*r->alpha) + (r->alpha_proven ? "" : "?") : "";
    return " " + std::to_string(r->n) + " | " + std::to_string(r->m) + " | " + a + " |";
  };

  auto title = [](SolverKind s) {
    switch (s) {
      case SolverKind::exact: return "Exact branch and bound";
      case SolverKind::sa: return "Simulated annealing sampler (best of all reads)";
      case SolverKind::hybrid: return "Hybrid solver (annealing + repair + local search)";
    }
    return "";
  };

  for (auto solver : solvers) {
    out << "### " << title(solver) << "\n\n";
    header(true);
    for (const auto& name : instances) {
      out << "| " << name << " |" << graph_info(name);
      for (auto b : betas) {
        auto it = index.find({name, solver, b});
        out << ' ' << (it == index.end() ? std::string("") : cell(*it->second)) << " |";
      }
      out << '\n';
    }
    out << '\n';
  }

  if (std::find(solvers.begin(), solvers.end(), SolverKind::sa) != solvers.end()) {
    out << "### Percentage of annealing samples that are stable sets\n\n";
    header(false);
    for (const auto& name : instances) {
      out << "| " << name << " |";
      for (auto b : betas) {
        auto it = index.find({name, SolverKind::sa, b});
        std::string v;
        if (it != index.end() && it->second->error.empty())
          v = fixed(100.0 * it->second->feasible_frac, 2);
        out << ' ' << v << " |";
      }
      out << '\n';
    }
    out << '\n';
  }

  out << "Legend: `!` best vector is not a stable set; `*` stable but below alpha(G); "
         "`?` alpha not proven optimal.\n";
  bool any_error = false;
  for (const auto& r : report.rows)
    if (!r.error.empty()) {
      if (!any_error) out << "\nErrors:\n\n";
      any_error = true;
      out << "- " << r.instance << " (" << to_string(r.solver) << ", beta = " << r.beta
          << "): " << r.error << '\n';
    }
  return out.str();
}

std::string bits(const BinaryVector& x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) s[i] = '1';
  return s;
}

}  // namespace

std::string render_tables(const ExperimentReport& report, TableStyle style) {
  if (report.rows.empty()) throw ArgumentError("render_tables: empty report");
  return style == TableStyle::csv ? render_csv(report) : render_markdown(report);
}

std::string render_samples_jsonl(const ExperimentReport& report) {
  std::ostringstream out;
  for (const auto& ss : report.sample_sets)
    for (std::size_t r = 0; r < ss.samples.size(); ++r) {
      const auto& s = ss.samples[r];
      out << nlohmann::json{{"instance", ss.instance_id}, {"solver", "sa"},
                            {"beta", ss.beta},           {"seed", ss.master_seed},
                            {"read", r},                 {"energy", s.energy},
                            {"cardinality", s.cardinality}, {"violations", s.violations},
                            {"x", bits(s.x)}}
                 .dump()
          << '\n';
    }
  for (const auto& row : report.rows) {
    if (row.solver == SolverKind::sa || !row.error.empty()) continue;
    out << nlohmann::json{{"instance", row.instance}, {"solver", to_string(row.solver)},
                          {"beta", row.beta},         {"seed", row.seed},
                          {"cardinality", row.best_card}, {"stable", row.stable},
                          {"x", bits(row.best_x)}}
               .dump()
        << '\n';
  }
  return out.str();
}

}  // namespace stabset
