#pragma once

#include "incmax/core.hpp"
#include "incmax/objectives.hpp"

#include <optional>
#include <string>
#include <vector>

namespace incmax {

// ---------------------------------------------------------------------------
// Region choosing lower-bound machinery

struct RegionInstance {
  RegionSpec spec;
  IncrementalInstance instance;
};

RegionInstance gen_region_choosing(std::size_t regions, double beta);

/// (rho^(1/beta) + eps - x)^(1/(1-beta)) - x / (x - 1 + eps)
double h_function(double rho, double beta, double eps, double x);

struct ProblematicPairCertificate {
  double rho = 0;
  double beta = 0;
  double eps = 0;
  std::size_t grid_points = 0;
  /// Largest h over the grid nodes, and where it occurs.
  double max_sampled = 0;
  double worst_x = 0;
  /// Upper bound on sup h over the whole domain.
  double sup_bound = 0;
  bool certified = false;
  std::string note;

  std::string to_json() const;
};

inline constexpr std::size_t kCertificateGrid = 100'000;

/// Tries eps = 1e-1, 1e-2, ..., 1e-6. On every grid cell [a, b] both terms of
/// h are decreasing in x, so h <= A(a) - B(b) bounds the cell; the pair is
/// certified when that bound is negative on all cells covering [1, rho^(1/beta)].
/// An empty domain (rho^(1/beta) <= 1) is reported as not certified.
ProblematicPairCertificate certify_problematic(double rho, double beta, std::size_t grid = kCertificateGrid);

struct ScheduleSequence {
  std::vector<std::size_t> k;

  void validate() const;
  /// (1/k_i) sum_{j<=i} k_j
  Rational alpha(std::size_t i) const;
  /// k_i / k_{i-1}, i >= 1
  Rational q(std::size_t i) const;
  std::string str() const;
};

struct ScheduleCheck {
  bool holds = true;
  std::optional<std::size_t> first_violation;
};

/// alpha_i <= rho^(1/beta) for all i.
ScheduleCheck check_schedule_condition(const ScheduleSequence& seq, double rho, double beta);

/// Worst ratio over all cardinalities 1..N(N+1)/2 of the structured solution
/// that fills regions seq.k[0], seq.k[1], ... completely, in order. Regions
/// that are not listed come afterwards. The last entry need not be N.
double structured_worst_ratio(const ScheduleSequence& seq, std::size_t regions, double beta);

struct RegionSchedule {
  ScheduleSequence sequence;
  double worst_ratio = 1;
};

inline constexpr std::size_t kRegionSearchCap = 40;

/// Minimum worst ratio over all structured solutions, by dynamic programming
/// over (previous region, elements taken so far).
RegionSchedule best_region_schedule(std::size_t regions, double beta, std::size_t cap = kRegionSearchCap);

// ---------------------------------------------------------------------------
// Bridge-flow family G_k

struct GkInstance {
  std::size_t k = 0;
  BridgeFlowInstance bridge;
  /// "(v2_i,v3_i)" per ground element.
  std::vector<std::string> element_names;
  /// Region index i of each ground element's (v2_i, v3_i).
  std::vector<std::size_t> cut_vertex_index;
};

/// Ground elements 0..2k-1 are (v2_{k+1},v3_{k+1}) ... (v2_{3k},v3_{3k}),
/// then (v2_1,v3_1) ... (v2_k,v3_k), then (v2_{3k+1},v3_{3k+1}) ... (v2_{4k},v3_{4k}).
GkInstance gen_bridge_flow_gk(std::size_t k);

/// k / (k-1)
Rational gk_base(std::size_t k);
/// sum_{i=2k+1-j}^{2k} (k/(k-1))^i
Rational gk_greedy_value(std::size_t k, std::size_t j);
/// 2 (k-1) (k/(k-1))^(2k+1)
Rational gk_optimum_value(std::size_t k);
/// 2 q^(2k) / (q^(2k) - 1)
Rational gk_ratio_closed_form(std::size_t k);
/// Ground elements of the optimum at cardinality 2k.
Subset gk_optimum_witness(const GkInstance& g);

struct GkRow {
  std::size_t k = 0;
  Rational greedy_value;
  Rational optimum_value;
  Rational ratio;
  bool matches_closed_form = false;
  bool trace_matches = false;
};

/// Runs greedy on G_k for 2k steps and compares with the closed forms. The
/// optimum at 2k is the full-graph flow, attained by the witness.
GkRow gk_greedy_row(std::size_t k);

// ---------------------------------------------------------------------------
// Unbounded-greedy traps

double default_trap_eps(std::size_t k);

/// Item 0: size = value = 1-eps. Items 1..k: size 2 eps, value 1-2eps.
/// Items k+1..2k: size = value = eps^2.
KnapsackInstance gen_knapsack_trap(std::size_t k, std::optional<double> eps = {});

/// Star with center 0 (1-eps), leaves 1..k (1-2eps) and isolated vertices
/// k+1..2k (eps^2), as set packing over the star's edges.
SetSystem gen_independent_set_trap(std::size_t k, std::optional<double> eps = {});

/// Pair 0 joins the ends of a path with 2k-1 edges (weight 1-eps); pairs
/// 1..2k-1 are the path edges (1-2eps); pairs 2k..3k-1 are isolated edges (eps^2).
PathSystem gen_disjoint_paths_trap(std::size_t k, std::optional<double> eps = {});

// ---------------------------------------------------------------------------
// Witness fixtures

struct ExpectedVerdict {
  Property property = Property::monotone;
  double alpha = 0;
  Verdict verdict = Verdict::holds;
  std::optional<Subset> witness_s;
  std::optional<Subset> witness_t;
};

struct WitnessFixture {
  std::string name;
  IncrementalInstance instance;
  std::vector<ExpectedVerdict> expected;
};

inline const Rational kFig1Eps{1, 1000};

FlowNetwork fig1_network();
WeightedGraph p3_graph();
BridgeFlowInstance fig3_bridge();

std::vector<WitnessFixture> gen_witnesses();

}  // namespace incmax
