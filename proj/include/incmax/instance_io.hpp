#pragma once

#include "incmax/objectives.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace incmax {

enum class InstanceKind {
  knapsack,
  matching,
  set_packing,
  coverage,
  disjoint_paths,
  region_choosing,
  bridge_flow,
  table,
};

std::string kind_name(InstanceKind kind);
InstanceKind parse_kind(const std::string& name);

/// A serializable instance. set_packing and coverage both carry a SetSystem.
struct InstanceDocument {
  InstanceKind kind = InstanceKind::table;
  std::string label;
  std::variant<KnapsackInstance, WeightedGraph, SetSystem, PathSystem, RegionSpec, BridgeFlowInstance,
               TableObjective>
      body;
  /// Optional display names of the ground elements.
  std::vector<std::string> element_names;
};

/// JSON text with a top-level "kind" field. Rationals are "p/q" strings and
/// infinite capacities "inf".
std::string to_json(const InstanceDocument& doc);
/// Throws InputError on malformed documents.
InstanceDocument from_json(const std::string& text);

InstanceDocument load_instance(const std::string& path);
void save_instance(const InstanceDocument& doc, const std::string& path);

IncrementalInstance build_instance(const InstanceDocument& doc);

// ---------------------------------------------------------------------------
// Named generators

using GeneratorParams = std::map<std::string, std::string>;

/// Parses "name:key=value,key=value".
std::pair<std::string, GeneratorParams> parse_generator_spec(const std::string& spec);

/// Builds a document from a generator name and its parameters. Throws
/// InputError for unknown names or parameters.
InstanceDocument generate(const std::string& name, const GeneratorParams& params);
InstanceDocument generate(const std::string& spec);

std::vector<std::string> generator_names();

}  // namespace incmax
