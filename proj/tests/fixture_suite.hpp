#pragma once

#include "incmax/adversarial.hpp"
#include "incmax/fixtures.hpp"
#include "incmax/objectives.hpp"

#include <string>
#include <vector>

namespace incmax::testing {

enum class Family { knapsack, matching, coverage, coverage_costs, set_packing, region, bridge_flow, trap };

struct Fixture {
  std::string name;
  Family family;
  IncrementalInstance instance;
  /// Largest cardinality the competitive-ratio runs go up to.
  std::size_t k_max;
  /// Set when the instance is a bridge-flow network.
  std::optional<BridgeFlowInstance> bridge;
};

inline std::vector<Fixture> fixture_suite() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, Family fam, IncrementalInstance inst, std::size_t k_max = 0,
                 std::optional<BridgeFlowInstance> bridge = {}) {
    const std::size_t k = k_max == 0 ? inst.size() : std::min(k_max, inst.size());
    out.push_back({std::move(name), fam, std::move(inst), k, std::move(bridge)});
  };

  std::uint64_t seed = 11;
  for (std::size_t n : {5, 6, 8, 10, 12})
    for (int rep = 0; rep < 2; ++rep, ++seed)
      add("knapsack/n" + std::to_string(n) + "/s" + std::to_string(seed), Family::knapsack,
          knapsack_objective(random_knapsack(n, seed)));

  for (std::size_t e : {5, 7, 8, 10, 12}) {
    add("matching/e" + std::to_string(e), Family::matching, matching_objective(random_matching(6, e, seed++)));
  }
  add("bmatching/e7", Family::matching, matching_objective(random_matching(5, 7, seed++, 2)));
  add("bmatching/e9", Family::matching, matching_objective(random_matching(6, 9, seed++, 3)));

  for (std::size_t s : {5, 6, 8, 10})
    add("coverage/s" + std::to_string(s), Family::coverage, coverage_objective(random_coverage(s, 8, seed++)));
  for (std::size_t s : {6, 8})
    add("coverage_costs/s" + std::to_string(s), Family::coverage_costs,
        coverage_objective(random_coverage(s, 7, seed++, true)));
  for (std::size_t s : {5, 6, 8, 10})
    add("set_packing/s" + std::to_string(s), Family::set_packing,
        set_packing_objective(random_set_packing(s, 9, seed++)));

  for (std::size_t n : {2, 3, 4, 5, 6}) {
    auto r = gen_region_choosing(n, 0.86);
    add("region/N" + std::to_string(n), Family::region, std::move(r.instance));
  }
  {
    auto r = gen_region_choosing(8, 0.86);
    add("region/N8", Family::region, std::move(r.instance), 8);
  }

  for (auto [u, w] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {3, 3}, {2, 4}}) {
    BridgeFlowInstance b = random_bridge_flow(u, w, seed++);
    add("bridge_flow/u" + std::to_string(u) + "w" + std::to_string(w), Family::bridge_flow,
        bridge_flow_objective(b), 0, b);
  }
  add("fig3", Family::bridge_flow, bridge_flow_objective(fig3_bridge()), 0, fig3_bridge());
  add("p3", Family::matching, matching_objective(p3_graph()));

  add("knapsack_trap/k2", Family::trap, knapsack_objective(gen_knapsack_trap(2)));
  add("independent_set_trap/k3", Family::trap, set_packing_objective(gen_independent_set_trap(3)));
  add("disjoint_paths_trap/k2", Family::trap, disjoint_paths_objective(gen_disjoint_paths_trap(2)));
  return out;
}

}  // namespace incmax::testing
