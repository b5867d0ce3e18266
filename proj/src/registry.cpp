#include "stabset/registry.hpp"

#include <array>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>

#include "stabset/errors.hpp"

#ifndef STABSET_DEFAULT_DATA_DIR
#define STABSET_DEFAULT_DATA_DIR "data/dimacs"
#endif

namespace stabset {
namespace {

using S = InstanceSource;

// n and m of the stable-set graph (edges are conflicts), stability number.
const std::array<ManifestEntry, 16> kManifest{{
    {"C125.9", 125, 787, 34, S::dimacs_file},
    {"DSJC125.5", 125, 3859, 10, S::dimacs_file},
    {"DSJC125.9", 125, 789, 34, S::dimacs_file},
    {"hamming6_2", 64, 192, 32, S::generator},
    {"hamming6_4", 64, 1312, 4, S::generator},
    {"johnson8_2_4", 28, 168, 4, S::generator},
    {"johnson8_4_4", 70, 560, 14, S::generator},
    {"johnson16_2_4", 120, 1680, 8, S::generator},
    {"MANN_a9", 45, 72, 16, S::generator},
    {"paley61", 61, 915, 5, S::generator},
    {"paley73", 73, 1314, 5, S::generator},
    {"paley89", 89, 1958, 5, S::generator},
    {"paley97", 97, 2328, 6, S::generator},
    {"paley101", 101, 2525, 5, S::generator},
    {"spin5", 125, 375, 50, S::generator},
    {"torus11", 121, 242, 55, S::generator},
}};

struct Generated {
  Graph graph;
  std::string how;
};

Generated generate(const std::string& name) {
  if (name.rfind("paley", 0) == 0) {
    auto q = static_cast<std::uint32_t>(std::stoul(name.substr(5)));
    return {gen_paley(q), "gen_paley(" + std::to_string(q) + ")"};
  }
  if (name == "torus11") {
    const std::array<std::uint32_t, 2> dims{11, 11};
    return {gen_torus(dims), "gen_torus([11,11])"};
  }
  if (name == "spin5") {
    const std::array<std::uint32_t, 3> dims{5, 5, 5};
    return {gen_torus(dims), "gen_torus([5,5,5])"};
  }
  if (name == "hamming6_2") return {gen_hamming_complement(6, 2), "complement of hamming6-2"};
  if (name == "hamming6_4") return {gen_hamming_complement(6, 4), "complement of hamming6-4"};
  if (name == "johnson8_2_4") return {gen_johnson_complement(8, 2, 4), "complement of johnson8-2-4"};
  if (name == "johnson8_4_4") return {gen_johnson_complement(8, 4, 4), "complement of johnson8-4-4"};
  if (name == "johnson16_2_4")
    return {gen_johnson_complement(16, 2, 4), "complement of johnson16-2-4"};
  if (name == "MANN_a9") return {gen_mann_a9_complement(), "complement of MANN_a9"};
  throw LookupError("no generator for '" + name + "'");
}

std::string find_file(const std::string& dir, const std::string& name) {
  namespace fs = std::filesystem;
  for (const char* ext : {".dimacs", ".clq", ".col"}) {
    fs::path p = fs::path(dir) / (name + ext);
    if (fs::exists(p)) return p.string();
  }
  return {};
}

void check_manifest(const ManifestEntry& e, const Graph& g, const std::string& origin) {
  if (g.n() != e.n || g.m() != e.m)
    throw IntegrityError(e.name + ": " + origin + " has n=" + std::to_string(g.n()) +
                         ", m=" + std::to_string(g.m()) + " but the manifest expects n=" +
                         std::to_string(e.n) + ", m=" + std::to_string(e.m));
}

}  // namespace

std::span<const ManifestEntry> instance_manifest() { return kManifest; }

const ManifestEntry* find_manifest_entry(const std::string& name) {
  for (const auto& e : kManifest)
    if (e.name == name) return &e;
  return nullptr;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("STABSET_DATA_DIR"); env && *env) return env;
  return STABSET_DEFAULT_DATA_DIR;
}

LoadedInstance load_instance(const std::string& name_or_path, const std::string& data_dir,
                             bool complement) {
  const ManifestEntry* entry = find_manifest_entry(name_or_path);
  if (!entry) {
    if (!std::filesystem::exists(name_or_path))
      throw LookupError("unknown instance '" + name_or_path +
                        "' (not a registered name or an existing file)");
    LoadedInstance out{name_or_path, load_dimacs_file(name_or_path, complement), std::nullopt,
                       name_or_path + (complement ? " (complemented)" : "")};
    return out;
  }

  const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
  const std::string path = find_file(dir, entry->name);
  if (!path.empty()) {
    Graph g = load_dimacs_file(path);
    std::string how = path;
    const std::size_t pairs = g.n() * (g.n() - 1) / 2;
    if (g.n() == entry->n && g.m() != entry->m && pairs - g.m() == entry->m) {
      g = g.complement();
      how += " (clique form, complemented)";
    }
    check_manifest(*entry, g, path);
    return {entry->name, std::move(g), entry->alpha, how};
  }
  if (entry->source == InstanceSource::dimacs_file)
    throw LookupError(entry->name + ": DIMACS file not found in '" + dir +
                      "' (expected " + entry->name + ".dimacs, .clq or .col)");
  auto [g, how] = generate(entry->name);
  check_manifest(*entry, g, how);
  return {entry->name, std::move(g), entry->alpha, how};
}

Graph instance_registry(const std::string& name, const std::string& data_dir) {
  if (!find_manifest_entry(name)) throw LookupError("unknown instance '" + name + "'");
  return load_instance(name, data_dir).graph;
}

}  // namespace stabset
