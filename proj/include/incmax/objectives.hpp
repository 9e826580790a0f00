#pragma once

#include "incmax/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace incmax {

// Size caps on the exhaustive inner searches, applied to |S| per evaluation.
inline constexpr std::size_t kKnapsackCap = 24;
inline constexpr std::size_t kMatchingCap = 24;
inline constexpr std::size_t kSetFamilyCap = 20;
inline constexpr std::size_t kPathPairCap = 16;
inline constexpr std::size_t kCandidatePathCap = 8;

// ---------------------------------------------------------------------------
// Knapsack (capacity 1)

struct KnapsackItem {
  double size = 0;
  double value = 0;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
};

/// f(S) = max value of S' subset of S with total size <= 1.
IncrementalInstance knapsack_objective(const KnapsackInstance& inst, std::string label = "knapsack");

// ---------------------------------------------------------------------------
// Weighted b-matching

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1;
};

struct WeightedGraph {
  std::size_t vertices = 0;
  std::vector<WeightedEdge> edges;
  /// b(v); empty means every vertex has capacity 1.
  std::vector<unsigned> capacities;
};

/// f(S) = max weight of a b-matching using only edges of S.
IncrementalInstance matching_objective(const WeightedGraph& g, std::string label = "matching");

// ---------------------------------------------------------------------------
// Set systems: packing and coverage

struct SetSystem {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
  /// Per-set weights (packing). Empty means all 1.
  std::vector<double> set_weights;
  /// Per-element weights (coverage). Empty means all 1.
  std::vector<double> element_weights;
  /// Per-set opening costs (coverage). Empty means no costs.
  std::vector<double> opening_costs;
};

/// f(S) = max total weight of pairwise-disjoint members of S.
IncrementalInstance set_packing_objective(const SetSystem& sys, std::string label = "set_packing");

/// Without costs: weight of the union of S. With costs: max over S' of
/// covered weight minus opening costs (never below 0).
IncrementalInstance coverage_objective(const SetSystem& sys, std::string label = "coverage");

// ---------------------------------------------------------------------------
// Disjoint paths

struct DemandPair {
  std::size_t source = 0;
  std::size_t target = 0;
  double weight = 0;
  /// Vertex sequences from source to target.
  std::vector<std::vector<std::size_t>> candidate_paths;
};

struct PathSystem {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected
  std::vector<DemandPair> pairs;
};

/// f(S) = max weight of S' subset of S whose pairs can be routed on mutually
/// vertex-disjoint candidate paths.
IncrementalInstance disjoint_paths_objective(const PathSystem& ps, std::string label = "disjoint_paths");

// ---------------------------------------------------------------------------
// Region choosing

struct RegionSpec {
  std::size_t regions = 0;
  /// delta(i) = i^(beta-1) when set; otherwise `densities` gives delta(1..N).
  std::optional<double> beta;
  std::vector<double> densities;

  double density(std::size_t i) const;  // 1-based region index
  std::size_t ground_size() const { return regions * (regions + 1) / 2; }
  /// First element index of region i (1-based); region i holds i elements.
  std::size_t region_begin(std::size_t i) const { return (i - 1) * i / 2; }
  void validate() const;
};

/// f(S) = max_i |R_i n S| * delta(i).
IncrementalInstance region_choosing_objective(const RegionSpec& spec, std::string label = "region_choosing");

// ---------------------------------------------------------------------------
// Flows

struct Capacity {
  Rational value{0};
  bool infinite = false;

  static Capacity inf() { return Capacity{Rational(0), true}; }
  static Capacity of(Rational r) { return Capacity{std::move(r), false}; }
  std::string str() const { return infinite ? "inf" : value.str(); }
  static Capacity parse(const std::string& text);
  friend bool operator==(const Capacity&, const Capacity&) = default;
};

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Capacity capacity;
};

struct FlowNetwork {
  std::size_t vertices = 0;
  std::vector<FlowEdge> edges;
  std::size_t source = 0;
  std::size_t sink = 0;

  void validate() const;
};

/// Exact max-flow value (shortest augmenting paths). `enabled`, when
/// non-empty, selects the usable edges. Infinite capacities are replaced by
/// the sum of all finite capacities plus one; an s-t path made only of
/// infinite edges is rejected as an unbounded flow.
Rational max_flow(const FlowNetwork& net, const std::vector<char>& enabled = {});

/// Enumerates every s-t vertex cut and returns the smallest cut capacity.
/// Exponential in the vertex count; used as an independent check.
Rational min_cut_by_enumeration(const FlowNetwork& net, const std::vector<char>& enabled = {});

struct BridgeFlowInstance {
  FlowNetwork network;
  /// U side of the partition (source side).
  std::vector<char> source_side;
  /// Edge indices of the cut C; the ground set follows this order.
  std::vector<std::size_t> cut;

  /// Throws InputError unless the cut is a directed s-t cut without
  /// backward edges and `cut` lists exactly the U->W edges.
  void validate() const;
  std::vector<char> enabled_edges(const Subset& s) const;
};

/// f(S) = max flow in (V, E \ (C \ S)). Exact.
IncrementalInstance bridge_flow_objective(const BridgeFlowInstance& inst, std::string label = "bridge_flow");

/// f(S) = max flow using only the edges in S (every edge is an element).
/// Not incremental in general.
IncrementalInstance edge_flow_objective(const FlowNetwork& net, std::string label = "edge_flow");

// ---------------------------------------------------------------------------
// Explicit tables

/// f given per bitmask; masks absent from `values` evaluate to 0.
struct TableObjective {
  std::size_t elements = 0;
  std::vector<std::pair<std::uint64_t, Value>> values;
};

IncrementalInstance table_objective(const TableObjective& table, std::string label = "table");

/// Tabulates every subset of a small instance.
TableObjective tabulate(const IncrementalInstance& inst);

}  // namespace incmax
