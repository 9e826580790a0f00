#include "incmax/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace incmax {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational small_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(pick(rng, 1, 9)), static_cast<long>(pick(rng, 1, 4)));
}

std::vector<std::vector<std::size_t>> random_sets(std::mt19937_64& rng, std::size_t sets, std::size_t universe) {
  if (sets < 1 || universe < 1) throw InputError("random set systems need sets and a universe");
  std::vector<std::vector<std::size_t>> out(sets);
  for (auto& s : out) {
    for (std::size_t e = 0; e < universe; ++e)
      if (uniform(rng, 0, 1) < 0.35) s.push_back(e);
    if (s.empty()) s.push_back(pick(rng, 0, universe - 1));
  }
  return out;
}

}  // namespace

KnapsackInstance random_knapsack(std::size_t items, std::uint64_t seed) {
  if (items < 1) throw InputError("knapsack needs at least one item");
  std::mt19937_64 rng(seed);
  KnapsackInstance inst;
  for (std::size_t i = 0; i < items; ++i) {
    const double size = uniform(rng, 0.05, 0.6);
    inst.items.push_back({size, uniform(rng, 0.1, 1.0)});
  }
  return inst;
}

WeightedGraph random_matching(std::size_t vertices, std::size_t edges, std::uint64_t seed, unsigned max_b) {
  if (vertices < 2) throw InputError("matching needs at least two vertices");
  if (edges < 1 || edges > vertices * (vertices - 1) / 2) throw InputError("edge count out of range");
  if (max_b < 1) throw InputError("vertex capacities start at 1");
  std::mt19937_64 rng(seed);
  WeightedGraph g;
  g.vertices = vertices;
  std::set<std::pair<std::size_t, std::size_t>> used;
  while (g.edges.size() < edges) {
    std::size_t u = pick(rng, 0, vertices - 1);
    std::size_t v = pick(rng, 0, vertices - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) continue;
    g.edges.push_back({u, v, uniform(rng, 0.1, 1.0)});
  }
  if (max_b > 1)
    for (std::size_t v = 0; v < vertices; ++v) g.capacities.push_back(static_cast<unsigned>(pick(rng, 1, max_b)));
  return g;
}

SetSystem random_coverage(std::size_t sets, std::size_t universe, std::uint64_t seed, bool with_costs) {
  std::mt19937_64 rng(seed);
  SetSystem sys;
  sys.universe = universe;
  sys.sets = random_sets(rng, sets, universe);
  for (std::size_t e = 0; e < universe; ++e) sys.element_weights.push_back(uniform(rng, 0.1, 1.0));
  if (with_costs)
    for (std::size_t i = 0; i < sets; ++i) sys.opening_costs.push_back(uniform(rng, 0.0, 0.8));
  return sys;
}

SetSystem random_set_packing(std::size_t sets, std::size_t universe, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SetSystem sys;
  sys.universe = universe;
  sys.sets = random_sets(rng, sets, universe);
  for (std::size_t i = 0; i < sets; ++i) sys.set_weights.push_back(uniform(rng, 0.1, 1.0));
  return sys;
}

BridgeFlowInstance random_bridge_flow(std::size_t u, std::size_t w, std::uint64_t seed) {
  if (u < 1 || w < 1) throw InputError("both sides need at least one inner vertex");
  std::mt19937_64 rng(seed);
  BridgeFlowInstance b;
  FlowNetwork& net = b.network;
  // 0 = s, 1..u = a_i, u+1..u+w = b_j, u+w+1 = t
  net.vertices = u + w + 2;
  net.source = 0;
  net.sink = u + w + 1;
  b.source_side.assign(net.vertices, 0);
  for (std::size_t v = 0; v <= u; ++v) b.source_side[v] = 1;

  for (std::size_t i = 1; i <= u; ++i) net.edges.push_back({0, i, Capacity::of(small_rational(rng))});
  for (std::size_t i = 1; i <= u; ++i)
    for (std::size_t j = i + 1; j <= u; ++j)
      if (uniform(rng, 0, 1) < 0.3) net.edges.push_back({i, j, Capacity::of(small_rational(rng))});
  for (std::size_t j = u + 1; j <= u + w; ++j) net.edges.push_back({j, net.sink, Capacity::of(small_rational(rng))});
  for (std::size_t i = u + 1; i <= u + w; ++i)
    for (std::size_t j = i + 1; j <= u + w; ++j)
      if (uniform(rng, 0, 1) < 0.3) net.edges.push_back({i, j, Capacity::of(small_rational(rng))});
  for (std::size_t i = 1; i <= u; ++i)
    for (std::size_t j = u + 1; j <= u + w; ++j)
      if (uniform(rng, 0, 1) < 0.6) {
        b.cut.push_back(net.edges.size());
        net.edges.push_back({i, j, Capacity::of(small_rational(rng))});
      }
  if (b.cut.empty()) {
    b.cut.push_back(net.edges.size());
    net.edges.push_back({1, u + 1, Capacity::of(small_rational(rng))});
  }
  b.validate();
  return b;
}

FlowNetwork random_flow_network(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
  if (vertices < 2) throw InputError("flow network needs at least two vertices");
  std::mt19937_64 rng(seed);
  FlowNetwork net;
  net.vertices = vertices;
  net.source = 0;
  net.sink = vertices - 1;
  while (net.edges.size() < edges) {
    const std::size_t a = pick(rng, 0, vertices - 1);
    const std::size_t b = pick(rng, 0, vertices - 1);
    if (a == b) continue;
    net.edges.push_back({a, b, Capacity::of(small_rational(rng))});
  }
  return net;
}

}  // namespace incmax
