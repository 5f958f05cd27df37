#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "estrada/bounds.hpp"
#include "estrada/classify.hpp"

namespace estrada::cli {

/// Everything `estrada bounds` knows about one input.
struct Report {
  std::string input;
  SourceKind source = SourceKind::graph;
  std::optional<GraphClassification> classification;  // graphs only
  BoundTable table;
  EqualityCertificate certificate;
  /// Wall-clock milliseconds per stage; only filled with --timing, so plain
  /// runs stay byte-for-byte reproducible.
  std::optional<std::map<std::string, double>> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json classification_to_json(const GraphClassification& c);
GraphClassification classification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Header `k,seq,bound_general,bound_bipartite,bound_matrix,exact_ee,gap`,
/// values with 17 significant digits, absent columns left empty.
std::string to_csv(const Report& report, bool with_header = true);

/// Human-readable table with 6 significant digits. `color` adds ANSI bold.
std::string to_table(const Report& report, bool color);

/// "regular r=3; pseudoregular μ=3; ...; bipartite: no".
std::string describe(const GraphClassification& c);

}  // namespace estrada::cli
