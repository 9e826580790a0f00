#pragma once

#include "incmax/core.hpp"

#include <functional>
#include <vector>

namespace incmax {

inline constexpr double kPhi = 1.6180339887498948482;
/// Competitive ratio guaranteed by the phase algorithm.
inline constexpr double kPhaseBound = 1.0 + kPhi;

/// floor(phi * k) for k >= 0, exact.
BigInt floor_phi_times(const BigInt& k);
/// ceil((1 + phi) * k) for k >= 1, exact.
BigInt next_phase_size(const BigInt& k);

struct PhaseSchedule {
  /// k_0 = 1, k_i = ceil((1+phi) k_{i-1}).
  std::vector<BigInt> k;
  /// t_0 = k_0, t_i = t_{i-1} + k_i (duplicates counted).
  std::vector<BigInt> t;

  static PhaseSchedule with_phases(std::size_t phases);
  std::size_t phases() const { return k.size(); }
  void extend();
  /// t_i <= floor(phi k_i).
  bool bound_holds(std::size_t i) const;
};

/// Returns an optimal (or approximate) solution of cardinality exactly k.
using CardinalityOracle = std::function<OptimumResult(std::size_t k)>;

CardinalityOracle exact_oracle(const IncrementalInstance& inst,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct PhaseRun {
  IncrementalOrder order;
  PhaseSchedule schedule;
  /// Order position (exclusive) reached at the end of each phase.
  std::vector<std::size_t> phase_end;
  /// Oracle value of each phase.
  std::vector<Value> phase_value;
  /// (1+phi) times the oracle's approximation factor.
  double claimed_bound = kPhaseBound;
};

/// Runs phases i = 0, 1, ... adding oracle(k_i) in greedy order and skipping
/// elements already present, until k_max distinct elements are emitted. When
/// k_i exceeds n the oracle is asked for n elements. The order is truncated
/// to k_max entries.
PhaseRun phase_algorithm(const IncrementalInstance& inst, std::size_t k_max, const CardinalityOracle& oracle);
PhaseRun phase_algorithm(const IncrementalInstance& inst, std::size_t k_max,
                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Same mechanics with an alpha-approximate oracle; claimed_bound = alpha (1+phi).
PhaseRun phase_algorithm_with_oracle(const IncrementalInstance& inst, std::size_t k_max,
                                     const CardinalityOracle& approx_oracle, double alpha);

struct GreedyStep {
  std::size_t element = 0;
  /// f(S_k) - f(S_{k-1}).
  Value gain;
  /// Number of elements attaining the maximum at this step.
  std::size_t ties = 0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
};

struct GreedyRun {
  IncrementalOrder order;
  GreedyTrace trace;
};

/// Adds the smallest-index maximizer of f(S_{k-1} + s) at every step.
GreedyRun greedy(const IncrementalInstance& inst, std::size_t k_max);

/// alpha e^alpha / (e^alpha - 1).
double greedy_bound(double alpha);

}  // namespace incmax
