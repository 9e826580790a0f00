#include "incmax/adversarial.hpp"
#include "incmax/core.hpp"
#include "incmax/fixtures.hpp"

#include <doctest.h>

using namespace incmax;

namespace {

PropertyReport run_check(const IncrementalInstance& inst, Property p, double alpha, const CheckOptions& opt = {}) {
  switch (p) {
    case Property::monotone:
      return check_monotone(inst, opt);
    case Property::subadditive:
      return check_subadditive(inst, opt);
    case Property::accountable:
      return check_accountable(inst, opt);
    case Property::alpha_augmentable:
      return check_alpha_augmentable(inst, alpha, opt);
    case Property::submodular:
      return check_submodular(inst, opt);
  }
  return {};
}

}  // namespace

TEST_CASE("table that drops is not monotone") {
  TableObjective t{2, {{1, Value(1.0)}, {2, Value(1.0)}, {3, Value(0.0)}}};
  const auto inst = table_objective(t);
  const auto r = check_monotone(inst);
  CHECK_FALSE(r.holds());
  CHECK(*r.witness_s == inst.make_subset({0}));
  CHECK(*r.witness_t == inst.make_subset({0, 1}));
  CHECK(reproduces_violation(inst, r));
}

TEST_CASE("witness fixtures match their expected verdicts") {
  for (const auto& w : gen_witnesses()) {
    for (const auto& e : w.expected) {
      const auto r = run_check(w.instance, e.property, e.alpha);
      INFO(w.name << " " << property_name(e.property, e.alpha));
      CHECK(r.verdict == e.verdict);
      if (e.witness_s) {
        REQUIRE(r.witness_s);
        CHECK(*r.witness_s == *e.witness_s);
      }
      if (e.witness_t) {
        REQUIRE(r.witness_t);
        CHECK(*r.witness_t == *e.witness_t);
      }
      if (!r.holds()) CHECK(reproduces_violation(w.instance, r));
    }
  }
}

TEST_CASE("fig1 edge flow") {
  const auto inst = edge_flow_objective(fig1_network());
  CHECK(check_monotone(inst).holds());
  const auto sub = check_subadditive(inst);
  CHECK_FALSE(sub.holds());
  CHECK(*sub.witness_s == inst.make_subset({0}));
  CHECK(*sub.witness_t == inst.make_subset({1}));
  const auto acc = check_accountable(inst);
  CHECK_FALSE(acc.holds());
  CHECK(*acc.witness_s == inst.make_subset({0, 1}));
  CHECK_FALSE(is_incremental(inst));
}

TEST_CASE("three-edge path matching") {
  const auto inst = matching_objective(p3_graph());
  CHECK(is_incremental(inst));
  const auto sm = check_submodular(inst);
  CHECK_FALSE(sm.holds());
  CHECK(*sm.witness_s == inst.make_subset({0, 1}));
  CHECK(*sm.witness_t == inst.make_subset({1, 2}));
  const auto a1 = check_alpha_augmentable(inst, 1.0);
  CHECK_FALSE(a1.holds());
  CHECK(*a1.witness_s == inst.make_subset({1}));
  CHECK(*a1.witness_t == inst.make_subset({0, 2}));
  CHECK(check_alpha_augmentable(inst, 2.0).holds());
}

TEST_CASE("region choosing is incremental") {
  for (std::size_t n : {2, 3, 4}) {
    const auto r = gen_region_choosing(n, 0.86);
    CHECK(is_incremental(r.instance, {CheckMode::automatic}));
  }
}

TEST_CASE("coverage is submodular and 1-augmentable") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto inst = coverage_objective(random_coverage(6, 7, seed));
    CHECK(check_submodular(inst).holds());
    CHECK(check_alpha_augmentable(inst, 1.0).holds());
    CHECK(is_incremental(inst));
  }
}

TEST_CASE("dividing by |T \\ S| is weaker than dividing by |T|") {
  const auto inst = matching_objective(p3_graph());
  CheckOptions by_diff;
  by_diff.augment_by_difference = true;
  for (double a : {1.0, 2.0}) {
    const bool plain = check_alpha_augmentable(inst, a).holds();
    const bool diff = check_alpha_augmentable(inst, a, by_diff).holds();
    CHECK((!plain || diff));
  }
}

TEST_CASE("modes and caps") {
  const auto r = gen_region_choosing(5, 0.86);  // 15 elements
  CHECK_THROWS_AS(check_subadditive(r.instance), ResourceError);
  CHECK_THROWS_AS(check_monotone(r.instance), ResourceError);
  const auto rep = check_subadditive(r.instance, {CheckMode::automatic, 5000});
  CHECK(rep.holds());
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.pairs_checked == 5000);
  CHECK(check_accountable(r.instance).exhaustive);
  CHECK_THROWS_AS(check_alpha_augmentable(r.instance, 0.0, {CheckMode::sampled}), InputError);
}

TEST_CASE("sampled checks find the fig1 violations") {
  const auto inst = edge_flow_objective(fig1_network());
  CheckOptions opt{CheckMode::sampled, 2000, 3};
  const auto sub = check_subadditive(inst, opt);
  CHECK_FALSE(sub.holds());
  CHECK_FALSE(sub.exhaustive);
  CHECK(reproduces_violation(inst, sub, opt));
  CHECK_FALSE(check_accountable(inst, opt).holds());
}

TEST_CASE("property names") {
  CHECK(property_name(Property::alpha_augmentable, 2) == "alpha_augmentable(2)");
  CHECK(property_name(Property::alpha_augmentable, 1.5) == "alpha_augmentable(1.5)");
  CHECK(verdict_name(Verdict::fails) == "fails");
}
