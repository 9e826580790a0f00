#include "incmax/adversarial.hpp"
#include "incmax/fixtures.hpp"
#include "incmax/objectives.hpp"

#include <doctest.h>

#include <random>

using namespace incmax;

TEST_CASE("max flow equals min cut on random networks") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t v = 3 + seed % 6;
    const auto net = random_flow_network(v, 2 * v + seed % 5, seed);
    INFO("seed " << seed);
    REQUIRE(max_flow(net) == min_cut_by_enumeration(net));
  }
}

TEST_CASE("max flow with a subset of edges enabled") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto net = random_flow_network(6, 14, seed);
    std::vector<char> enabled(net.edges.size());
    for (auto& e : enabled) e = static_cast<char>(rng() % 2);
    REQUIRE(max_flow(net, enabled) == min_cut_by_enumeration(net, enabled));
  }
}

TEST_CASE("small hand networks") {
  FlowNetwork net;
  net.vertices = 4;
  net.source = 0;
  net.sink = 3;
  net.edges = {{0, 1, Capacity::of(Rational(1, 2))},
               {0, 2, Capacity::of(1)},
               {1, 3, Capacity::of(1)},
               {2, 3, Capacity::of(Rational(1, 3))},
               {2, 1, Capacity::of(1)}};
  CHECK(max_flow(net) == Rational(4, 3));
  CHECK(max_flow(net, {1, 1, 1, 1, 0}) == Rational(5, 6));

  SUBCASE("infinite edges in series with a finite one") {
    net.edges[0].capacity = Capacity::inf();
    CHECK(max_flow(net) == Rational(4, 3));
    net.edges[2].capacity = Capacity::inf();
    CHECK_THROWS_AS(max_flow(net), InputError);
    // disabling the infinite path makes it bounded again
    CHECK(max_flow(net, {0, 1, 1, 1, 1}) == Rational(1));
  }
  SUBCASE("validation") {
    net.edges.push_back({0, 7, Capacity::of(1)});
    CHECK_THROWS_AS(max_flow(net), InputError);
    net.edges.pop_back();
    net.sink = 0;
    CHECK_THROWS_AS(max_flow(net), InputError);
  }
}

TEST_CASE("capacity parsing") {
  CHECK(Capacity::parse("inf").infinite);
  CHECK(Capacity::parse("3/4").value == Rational(3, 4));
  CHECK(Capacity::parse("0.5").value == Rational(1, 2));
  CHECK(Capacity::parse("2").str() == "2");
  CHECK_THROWS_AS(Capacity::parse("-1"), InputError);
}

TEST_CASE("G_2 construction") {
  const auto g = gen_bridge_flow_gk(2);
  const auto& net = g.bridge.network;
  CHECK(net.vertices == 26);
  CHECK(g.bridge.cut.size() == 8);
  CHECK(g.element_names[0] == "(v2_3,v3_3)");
  CHECK(g.element_names[4] == "(v2_1,v3_1)");
  CHECK(g.element_names[7] == "(v2_8,v3_8)");
  // cut capacities of the middle block are 2^(5-i) for i = 1..4
  for (std::size_t e = 0; e < 4; ++e) {
    const auto& c = net.edges[g.bridge.cut[e]].capacity;
    CHECK_FALSE(c.infinite);
    CHECK(c.value == Rational(1U << (4 - e)));
  }
  for (std::size_t e = 4; e < 8; ++e) CHECK(net.edges[g.bridge.cut[e]].capacity.infinite);
  CHECK(max_flow(net) == 64);
  const auto inst = bridge_flow_objective(g.bridge);
  CHECK(inst(Subset::full(8)) == Value::exact(64));
  CHECK(inst(inst.make_subset({0})) == Value::exact(16));
  CHECK(inst(gk_optimum_witness(g)) == Value::exact(64));
  // s-v2_1 plus the k-fold split of every v1 edge
  CHECK(inst(inst.make_subset({4})) == Value::exact(16));
}

TEST_CASE("G_2 full flow matches the enumerated min cut") {
  const auto g = gen_bridge_flow_gk(2);
  CHECK(min_cut_by_enumeration(g.bridge.network) == 64);
}

TEST_CASE("bridge flow objective equals a fresh max flow") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto b = random_bridge_flow(2 + seed % 3, 2 + seed % 2, seed);
    const auto inst = bridge_flow_objective(b);
    REQUIRE(inst.exact());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << inst.size()); ++m) {
      const Subset s = Subset::from_mask(inst.size(), m);
      const auto enabled = b.enabled_edges(s);
      REQUIRE(inst(s) == Value(max_flow(b.network, enabled)));
      if (m % 3 == 0) REQUIRE(inst(s) == Value(min_cut_by_enumeration(b.network, enabled)));
    }
  }
}

TEST_CASE("bridge flow validation") {
  auto b = fig3_bridge();
  CHECK_NOTHROW(b.validate());
  auto missing = b;
  missing.cut.pop_back();
  CHECK_THROWS_AS(missing.validate(), InputError);
  auto backward = b;
  backward.network.edges.push_back({3, 0, Capacity::of(1)});
  CHECK_THROWS_AS(backward.validate(), InputError);
  auto wrong_side = b;
  wrong_side.source_side[0] = 0;
  CHECK_THROWS_AS(wrong_side.validate(), InputError);
}

TEST_CASE("edge flow on fig1") {
  const auto inst = edge_flow_objective(fig1_network());
  CHECK(inst.exact());
  CHECK(inst(inst.make_subset({0})) == Value::exact(0));
  CHECK(inst(inst.make_subset({0, 1})) == Value::exact(1));
  CHECK(inst(inst.make_subset({2})) == Value(kFig1Eps));
  CHECK(inst(Subset::full(3)) == Value(Rational(1001, 1000)));
}
