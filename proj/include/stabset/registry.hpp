#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "stabset/graph.hpp"

namespace stabset {

/// How a registered instance is produced.
enum class InstanceSource { generator, dimacs_file };

/// One row of the built-in instance table: name, vertex count, edge count of the
/// stable-set (conflict) graph and its stability number.
struct ManifestEntry {
  std::string name;
  std::size_t n;
  std::size_t m;
  std::size_t alpha;
  InstanceSource source;
};

/// The sixteen benchmark instances in table order.
std::span<const ManifestEntry> instance_manifest();
const ManifestEntry* find_manifest_entry(const std::string& name);

/// Directory searched for DIMACS files: $STABSET_DATA_DIR if set, otherwise the
/// build-time default (data/dimacs in the source tree).
std::string default_data_dir();

struct LoadedInstance {
  std::string name;
  Graph graph;
  std::optional<std::size_t> known_alpha;  ///< from the manifest, when registered
  std::string provenance;                  ///< generator call or file path (+ polarity)
};

/// Resolves a manifest name or a DIMACS file path.
///
/// Generator-backed names (Paley, torus, spin, Hamming, Johnson, MANN_a9) are built
/// in memory. File-backed names (C125.9, DSJC125.5, DSJC125.9) are read from
/// `<data_dir>/<name>.{dimacs,clq,col}`; a file whose edge count equals the
/// manifest m is read literally, one whose count equals n(n-1)/2 - m (clique form)
/// is complemented. For every manifest name the resulting (n, m) is checked against
/// the manifest before return. Any other string is treated as a path to a DIMACS
/// file, complemented when `complement` is set.
///
/// Throws LookupError for unknown names and missing files, IntegrityError for
/// manifest mismatches, and the parser's errors for malformed files.
LoadedInstance load_instance(const std::string& name_or_path, const std::string& data_dir = {},
                             bool complement = false);

/// load_instance(name).graph for registered names only.
Graph instance_registry(const std::string& name, const std::string& data_dir = {});

}  // namespace stabset
