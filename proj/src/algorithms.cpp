#include "incmax/algorithms.hpp"

#include <algorithm>
#include <cmath>

namespace incmax {

BigInt floor_phi_times(const BigInt& k) {
  if (k < 0) throw InputError("floor_phi_times expects a nonnegative integer");
  // phi k = (k + sqrt(5 k^2)) / 2 and floor((k + x) / 2) = floor((k + floor(x)) / 2).
  const BigInt root = boost::multiprecision::sqrt(BigInt(5 * k * k));
  return (k + root) / 2;
}

BigInt next_phase_size(const BigInt& k) {
  if (k < 1) throw InputError("phase sizes start at 1");
  // (1+phi) k is irrational, so its ceiling is floor + 1.
  return k + floor_phi_times(k) + 1;
}

PhaseSchedule PhaseSchedule::with_phases(std::size_t phases) {
  PhaseSchedule s;
  for (std::size_t i = 0; i < phases; ++i) s.extend();
  return s;
}

void PhaseSchedule::extend() {
  if (k.empty()) {
    k.emplace_back(1);
    t.emplace_back(1);
    return;
  }
  k.push_back(next_phase_size(k.back()));
  t.push_back(t.back() + k.back());
}

bool PhaseSchedule::bound_holds(std::size_t i) const { return t.at(i) <= floor_phi_times(k.at(i)); }

CardinalityOracle exact_oracle(const IncrementalInstance& inst, std::uint64_t budget) {
  return [&inst, budget](std::size_t k) { return brute_force_optimum(inst, k, budget); };
}

PhaseRun phase_algorithm(const IncrementalInstance& inst, std::size_t k_max, const CardinalityOracle& oracle) {
  const std::size_t n = inst.size();
  if (k_max < 1 || k_max > n)
    throw InputError("k_max " + std::to_string(k_max) + " outside 1.." + std::to_string(n));
  PhaseRun run;
  std::vector<char> present(n, 0);
  while (run.order.size() < k_max) {
    run.schedule.extend();
    const BigInt& ki = run.schedule.k.back();
    const std::size_t want = ki > BigInt(n) ? n : ki.convert_to<std::size_t>();
    OptimumResult sol = oracle(want);
    if (sol.set.universe() != n || sol.set.size() != want)
      throw InputError("oracle returned a set of size " + std::to_string(sol.set.size()) + " for cardinality " +
                       std::to_string(want));
    for (std::size_t x : greedy_order(inst, sol.set)) {
      if (present[x]) continue;
      present[x] = 1;
      run.order.sequence.push_back(x);
    }
    run.phase_end.push_back(std::min(run.order.size(), k_max));
    run.phase_value.push_back(sol.value);
    if (want == n) break;
  }
  run.order.sequence.resize(std::min(run.order.size(), k_max));
  return run;
}

PhaseRun phase_algorithm(const IncrementalInstance& inst, std::size_t k_max, std::uint64_t budget) {
  return phase_algorithm(inst, k_max, exact_oracle(inst, budget));
}

PhaseRun phase_algorithm_with_oracle(const IncrementalInstance& inst, std::size_t k_max,
                                     const CardinalityOracle& approx_oracle, double alpha) {
  if (!(alpha >= 1)) throw InputError("approximation factor must be at least 1");
  PhaseRun run = phase_algorithm(inst, k_max, approx_oracle);
  run.claimed_bound = alpha * kPhaseBound;
  return run;
}

GreedyRun greedy(const IncrementalInstance& inst, std::size_t k_max) {
  const std::size_t n = inst.size();
  if (k_max < 1 || k_max > n)
    throw InputError("k_max " + std::to_string(k_max) + " outside 1.." + std::to_string(n));
  GreedyRun run;
  Subset current = inst.empty_set();
  Value current_value = inst(current);
  for (std::size_t step = 0; step < k_max; ++step) {
    std::optional<std::size_t> pick;
    Value best;
    std::size_t ties = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (current.contains(x)) continue;
      Value v = inst(current.with(x));
      if (!pick || v > best) {
        pick = x;
        best = std::move(v);
        ties = 1;
      } else if (v == best) {
        ++ties;
      }
    }
    current.insert(*pick);
    run.order.sequence.push_back(*pick);
    run.trace.steps.push_back({*pick, best - current_value, ties});
    current_value = std::move(best);
  }
  return run;
}

double greedy_bound(double alpha) {
  if (!(alpha > 0)) throw InputError("alpha must be positive");
  return alpha / -std::expm1(-alpha);
}

}  // namespace incmax
