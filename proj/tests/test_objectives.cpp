#include "incmax/adversarial.hpp"
#include "incmax/fixtures.hpp"
#include "incmax/objectives.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace incmax;
using incmax::testing::members;

TEST_CASE("knapsack against enumeration") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto kn = random_knapsack(9, seed);
    const auto inst = knapsack_objective(kn);
    for (std::uint64_t m = 0; m < (1U << 9); m += 7) {
      const auto idx = members(m);
      REQUIRE(inst(Subset::from_mask(9, m)).to_double() ==
              doctest::Approx(testing::knapsack_by_enumeration(kn, idx)).epsilon(1e-12));
    }
  }
}

TEST_CASE("knapsack trap values") {
  const auto kn = gen_knapsack_trap(4);
  REQUIRE(kn.items.size() == 9);
  const auto inst = knapsack_objective(kn);
  CHECK(inst(inst.make_subset({0})).to_double() == 0.9375);
  // item 0 does not fit with any big item
  CHECK(inst(inst.make_subset({0, 1})).to_double() == 0.9375);
  CHECK(inst(inst.make_subset({1, 2, 3, 4})).to_double() == doctest::Approx(3.5));
  CHECK(inst(inst.make_subset({0, 5, 6})).to_double() == doctest::Approx(0.9375 + 2.0 / 256));
  CHECK_THROWS_AS(gen_knapsack_trap(4, 0.1), InputError);
  CHECK_THROWS_AS(gen_knapsack_trap(0), InputError);
}

TEST_CASE("knapsack cap applies to the evaluated set") {
  KnapsackInstance kn;
  for (int i = 0; i < 30; ++i) kn.items.push_back({0.01, 0.5});
  const auto inst = knapsack_objective(kn);
  std::vector<std::size_t> ten{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(inst(inst.make_subset(ten)).to_double() == doctest::Approx(5.0));
  CHECK_THROWS_AS(inst(Subset::full(30)), ResourceError);
}

TEST_CASE("matching against enumeration") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (unsigned b : {1U, 2U}) {
      const auto g = random_matching(6, 10, seed, b);
      const auto inst = matching_objective(g);
      for (std::uint64_t m = 0; m < (1U << 10); m += 5) {
        REQUIRE(inst(Subset::from_mask(10, m)).to_double() ==
                doctest::Approx(testing::matching_by_enumeration(g, members(m))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("matching on the three-edge path") {
  const auto inst = matching_objective(p3_graph());
  CHECK(inst(inst.make_subset({0, 1, 2})).to_double() == 2.0);
  CHECK(inst(inst.make_subset({1})).to_double() == 1.0);
  CHECK(inst(inst.make_subset({0, 1})).to_double() == 1.0);
  CHECK(inst(inst.make_subset({0, 2})).to_double() == 2.0);
}

TEST_CASE("coverage") {
  SetSystem sys;
  sys.universe = 4;
  sys.sets = {{0, 1}, {1, 2}, {3}};
  const auto inst = coverage_objective(sys);
  CHECK(inst(inst.make_subset({0, 1})).to_double() == 3.0);
  CHECK(inst(Subset::full(3)).to_double() == 4.0);
  sys.element_weights = {1, 2, 3, 4};
  CHECK(coverage_objective(sys)(inst.make_subset({1})).to_double() == 5.0);

  SUBCASE("opening costs") {
    sys.element_weights.clear();
    sys.opening_costs = {1.5, 0.5, 2.0};
    const auto c = coverage_objective(sys);
    // {1} alone nets 1.5, nothing else pays for itself
    CHECK(c(c.make_subset({0, 1})).to_double() == doctest::Approx(1.5));
    CHECK(c(c.make_subset({2})).to_double() == 0.0);
    CHECK(c(Subset::full(3)).to_double() == doctest::Approx(1.5));
  }
}

TEST_CASE("coverage with costs against enumeration") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto sys = random_coverage(7, 6, seed, true);
    const auto inst = coverage_objective(sys);
    for (std::uint64_t m = 0; m < (1U << 7); ++m) {
      double best = 0;
      for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
        std::vector<char> cov(sys.universe, 0);
        double val = 0;
        for (std::size_t j : members(sub)) {
          val -= sys.opening_costs[j];
          for (std::size_t e : sys.sets[j]) cov[e] = 1;
        }
        for (std::size_t e = 0; e < sys.universe; ++e)
          if (cov[e]) val += sys.element_weights.empty() ? 1.0 : sys.element_weights[e];
        best = std::max(best, val);
        if (sub == 0) break;
      }
      REQUIRE(inst(Subset::from_mask(7, m)).to_double() == doctest::Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("set packing") {
  SetSystem sys;
  sys.universe = 5;
  sys.sets = {{0, 1}, {1, 2}, {2, 3}, {4}};
  sys.set_weights = {1.0, 3.0, 1.0, 0.5};
  const auto inst = set_packing_objective(sys);
  CHECK(inst(inst.make_subset({0, 1, 2})).to_double() == 3.0);
  CHECK(inst(inst.make_subset({0, 2})).to_double() == 2.0);
  CHECK(inst(Subset::full(4)).to_double() == 3.5);
}

TEST_CASE("independent set trap") {
  const auto sys = gen_independent_set_trap(3);
  const auto inst = set_packing_objective(sys);
  const double eps = default_trap_eps(3);
  REQUIRE(inst.size() == 7);
  CHECK(inst(inst.make_subset({0})).to_double() == doctest::Approx(1 - eps));
  CHECK(inst(inst.make_subset({0, 1})).to_double() == doctest::Approx(1 - eps));
  CHECK(inst(inst.make_subset({1, 2, 3})).to_double() == doctest::Approx(3 * (1 - 2 * eps)));
  CHECK(inst(inst.make_subset({0, 4, 5, 6})).to_double() == doctest::Approx(1 - eps + 3 * eps * eps));
}

TEST_CASE("disjoint paths trap") {
  const auto ps = gen_disjoint_paths_trap(2);
  const double eps = default_trap_eps(2);
  REQUIRE(ps.pairs.size() == 6);
  const auto inst = disjoint_paths_objective(ps);
  CHECK(inst(inst.make_subset({0})).to_double() == doctest::Approx(1 - eps));
  // the long pair blocks every path edge; alternate edges are disjoint
  CHECK(inst(inst.make_subset({0, 1, 2, 3})).to_double() == doctest::Approx(2 * (1 - 2 * eps)));
  // adjacent path edges share a vertex
  CHECK(inst(inst.make_subset({1, 2})).to_double() == doctest::Approx(1 - 2 * eps));
  CHECK(inst(inst.make_subset({1, 3})).to_double() == doctest::Approx(2 * (1 - 2 * eps)));
  CHECK(inst(inst.make_subset({0, 4, 5})).to_double() == doctest::Approx(1 - eps + 2 * eps * eps));
}

TEST_CASE("region choosing") {
  RegionSpec spec;
  spec.regions = 3;
  spec.densities = {1.0, 0.7, 0.5};
  const auto inst = region_choosing_objective(spec);
  REQUIRE(inst.size() == 6);
  CHECK(inst(inst.make_subset({1, 2})).to_double() == doctest::Approx(1.4));
  CHECK(inst(inst.make_subset({0, 1, 3})).to_double() == doctest::Approx(1.0));
  CHECK(inst(inst.make_subset({3, 4, 5})).to_double() == doctest::Approx(1.5));

  RegionSpec bad;
  bad.regions = 2;
  bad.densities = {1.0};
  CHECK_THROWS_AS(region_choosing_objective(bad), InputError);
  RegionSpec beta;
  beta.regions = 2;
  beta.beta = 1.5;
  CHECK_THROWS_AS(region_choosing_objective(beta), InputError);
}

TEST_CASE("table objective") {
  TableObjective t{2, {{1, Value::exact(1, 2)}, {3, Value::exact(2)}}};
  const auto inst = table_objective(t);
  CHECK(inst.exact());
  CHECK(inst(inst.make_subset({1})) == Value(0.0));
  CHECK(inst(inst.make_subset({0, 1})) == Value::exact(2));
  const auto back = tabulate(inst);
  CHECK(back.elements == 2);
  CHECK(table_objective(back)(inst.make_subset({0})) == Value::exact(1, 2));
  TableObjective big{64, {}};
  CHECK_THROWS_AS(table_objective(big), InputError);
}
