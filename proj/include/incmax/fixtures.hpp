#pragma once

#include "incmax/objectives.hpp"

#include <cstdint>

namespace incmax {

/// Sizes in [0.05, 0.6], values in [0.1, 1].
KnapsackInstance random_knapsack(std::size_t items, std::uint64_t seed);

/// Distinct random edges, weights in [0.1, 1], b(v) uniform in 1..max_b.
WeightedGraph random_matching(std::size_t vertices, std::size_t edges, std::uint64_t seed, unsigned max_b = 1);

/// Each set holds every universe element with probability 0.35 (never
/// empty). Element weights in [0.1, 1]; opening costs in [0, 0.8] if asked.
SetSystem random_coverage(std::size_t sets, std::size_t universe, std::uint64_t seed, bool with_costs = false);

/// As random_coverage, with set weights in [0.1, 1].
SetSystem random_set_packing(std::size_t sets, std::size_t universe, std::uint64_t seed);

/// Source side {s, a_1..a_u}, sink side {b_1..b_w, t}; random forward edges
/// inside each side and random cut edges across, small rational capacities.
BridgeFlowInstance random_bridge_flow(std::size_t u, std::size_t w, std::uint64_t seed);

/// Random directed network with `edges` edges and rational capacities.
FlowNetwork random_flow_network(std::size_t vertices, std::size_t edges, std::uint64_t seed);

}  // namespace incmax
