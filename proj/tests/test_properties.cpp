#include "incmax/algorithms.hpp"
#include "incmax/core.hpp"
#include "incmax/fixtures.hpp"

#include "fixture_suite.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace incmax;
using incmax::testing::Family;
using incmax::testing::Fixture;

namespace {

const std::vector<Fixture>& suite() {
  static const std::vector<Fixture> s = testing::fixture_suite();
  return s;
}

const OptimumTable& table_for(std::size_t i) {
  static std::vector<std::optional<OptimumTable>> cache(suite().size());
  if (!cache[i]) cache[i] = optimum_table(suite()[i].instance, suite()[i].k_max);
  return *cache[i];
}

CheckOptions auto_opts(std::uint64_t seed) { return {CheckMode::automatic, 20'000, seed}; }

// f'(S) = f(perm(S))
IncrementalInstance relabel(const IncrementalInstance& inst, const std::vector<std::size_t>& perm) {
  const std::size_t n = inst.size();
  auto f = [&inst, perm, n](const Subset& s) {
    Subset t(n);
    s.for_each([&](std::size_t x) { t.insert(perm[x]); });
    return inst(t);
  };
  return IncrementalInstance(n, f, inst.label() + "/relabelled", inst.traits());
}

bool prefix_densities_nonincreasing(const IncrementalInstance& inst, const std::vector<std::size_t>& order) {
  Subset s(inst.size());
  Value prev;
  for (std::size_t i = 0; i < order.size(); ++i) {
    s.insert(order[i]);
    const Value d = density(inst, s);
    if (i > 0 && !leq_tol(d, prev)) return false;
    prev = d;
  }
  return true;
}

}  // namespace

TEST_CASE("every fixture is incremental") {
  std::uint64_t seed = 1;
  for (const auto& fx : suite()) {
    INFO(fx.name);
    const auto opt = auto_opts(seed++);
    CHECK(check_monotone(fx.instance, opt).holds());
    CHECK(check_subadditive(fx.instance, opt).holds());
    CHECK(check_accountable(fx.instance, opt).holds());
  }
}

TEST_CASE("optimum densities do not increase") {
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& t = table_for(i);
    INFO(suite()[i].name);
    for (std::size_t k = 2; k <= t.k_max(); ++k) {
      const Value lhs = t.value(k) * same_mode(static_cast<double>(k - 1), t.value(k).is_exact());
      const Value rhs = t.value(k - 1) * same_mode(static_cast<double>(k), t.value(k).is_exact());
      CHECK(leq_tol(lhs, rhs));
      CHECK(geq_tol(t.value(k), t.value(k - 1)));
    }
  }
}

TEST_CASE("greedy order of an optimum has nonincreasing prefix densities") {
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& fx = suite()[i];
    const auto& t = table_for(i);
    INFO(fx.name);
    for (std::size_t k = 1; k <= t.k_max(); ++k) {
      const auto order = greedy_order(fx.instance, t.witness(k));
      REQUIRE(order.size() == k);
      CHECK(prefix_densities_nonincreasing(fx.instance, order));
    }
  }
}

TEST_CASE("the phase algorithm stays within 1 + phi") {
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& fx = suite()[i];
    const auto& t = table_for(i);
    INFO(fx.name);
    CardinalityOracle cached = [&t, &fx](std::size_t k) {
      if (k <= t.k_max()) return t.rows()[k - 1];
      return brute_force_optimum(fx.instance, k);
    };
    const auto run = phase_algorithm(fx.instance, fx.k_max, cached);
    validate_order(run.order, fx.instance.size());
    const auto rep = competitive_ratio(fx.instance, run.order, t);
    CHECK(rep.within(kPhaseBound));
    CHECK(rep.worst_ratio.to_double() >= 1.0 - 1e-12);
  }
}

TEST_CASE("greedy on submodular coverage stays within e/(e-1)") {
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& fx = suite()[i];
    if (fx.family != Family::coverage) continue;
    INFO(fx.name);
    const auto run = greedy(fx.instance, fx.k_max);
    CHECK(competitive_ratio(fx.instance, run.order, table_for(i)).within(greedy_bound(1.0)));
  }
}

TEST_CASE("optimum values do not depend on labels") {
  std::mt19937_64 rng(17);
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& fx = suite()[i];
    if (fx.instance.size() > 12) continue;
    INFO(fx.name);
    std::vector<std::size_t> perm(fx.instance.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = relabel(fx.instance, perm);
    const auto t2 = optimum_table(moved, fx.k_max);
    for (std::size_t k = 1; k <= fx.k_max; ++k) CHECK(t2.value(k) == table_for(i).value(k));
  }
}

TEST_CASE("random instances: phase ratio bound and accountability") {
  // fresh instances beyond the fixed suite
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    std::mt19937_64 rng(seed);
    IncrementalInstance inst = [&]() {
      switch (seed % 4) {
        case 0:
          return knapsack_objective(random_knapsack(4 + rng() % 6, seed));
        case 1:
          return matching_objective(random_matching(5, 4 + rng() % 6, seed, 1 + rng() % 2));
        case 2:
          return coverage_objective(random_coverage(4 + rng() % 5, 6, seed, rng() % 2 == 0));
        default:
          return bridge_flow_objective(random_bridge_flow(2 + rng() % 2, 2 + rng() % 2, seed));
      }
    }();
    INFO(inst.label() << " seed " << seed);
    const std::size_t n = inst.size();
    const auto table = optimum_table(inst, n);
    const auto run = phase_algorithm(inst, n);
    CHECK(competitive_ratio(inst, run.order, table).within(kPhaseBound));
    CHECK(check_accountable(inst).holds());
    // ratio of the reversed greedy order of the full set is still finite
    const auto order = greedy_order(inst, Subset::full(n));
    CHECK(prefix_densities_nonincreasing(inst, order));
  }
}

TEST_CASE("competitive ratio is at least one for any order") {
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& fx = suite()[i];
    IncrementalOrder order;
    order.sequence.resize(fx.instance.size());
    std::iota(order.sequence.begin(), order.sequence.end(), 0);
    std::shuffle(order.sequence.begin(), order.sequence.end(), rng);
    order.sequence.resize(fx.k_max);
    const auto rep = competitive_ratio(fx.instance, order, table_for(i));
    for (const auto& row : rep.rows) CHECK(row.ratio.to_double() >= 1.0 - 1e-9);
  }
}
