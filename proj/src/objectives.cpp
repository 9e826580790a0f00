#include "incmax/objectives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace incmax {

namespace {

constexpr double kCapacitySlack = 1e-12;

void check_cap(std::size_t have, std::size_t cap, const char* what) {
  if (have > cap) throw ResourceError(std::string(what) + " exceeds the exhaustive-search cap", have, cap);
}

void check_weight(double w, const char* what) {
  if (!(w >= 0) || !std::isfinite(w)) throw InputError(std::string(what) + " must be finite and nonnegative");
}

// Include/exclude search over a list of candidate items, best-first by
// weight, pruning on the sum of the weights not yet decided.
template <class Fits, class Take, class Undo>
double pack_search(const std::vector<std::size_t>& items, const std::vector<double>& weight, Fits fits,
                   Take take, Undo undo) {
  std::vector<std::size_t> order = items;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  std::vector<double> suffix(order.size() + 1, 0.0);
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weight[order[i]];

  double best = 0;
  auto dfs = [&](auto&& self, std::size_t pos, double acc) -> void {
    if (acc > best) best = acc;
    if (pos == order.size() || acc + suffix[pos] <= best) return;
    const std::size_t x = order[pos];
    if (fits(x)) {
      take(x);
      self(self, pos + 1, acc + weight[x]);
      undo(x);
    }
    self(self, pos + 1, acc);
  };
  dfs(dfs, 0, 0.0);
  return best;
}

}  // namespace

IncrementalInstance knapsack_objective(const KnapsackInstance& inst, std::string label) {
  if (inst.items.empty()) throw InputError("knapsack instance has no items");
  std::vector<double> value;
  std::vector<double> size;
  for (const auto& it : inst.items) {
    check_weight(it.size, "item size");
    check_weight(it.value, "item value");
    size.push_back(it.size);
    value.push_back(it.value);
  }
  auto f = [value, size](const Subset& s) -> Value {
    check_cap(s.size(), kKnapsackCap, "knapsack subset");
    double used = 0;
    return pack_search(
        s.indices(), value, [&](std::size_t x) { return used + size[x] <= 1.0 + kCapacitySlack; },
        [&](std::size_t x) { used += size[x]; }, [&](std::size_t x) { used -= size[x]; });
  };
  return IncrementalInstance(inst.items.size(), std::move(f), std::move(label), {false, true});
}

IncrementalInstance matching_objective(const WeightedGraph& g, std::string label) {
  if (g.edges.empty()) throw InputError("graph has no edges");
  if (!g.capacities.empty() && g.capacities.size() != g.vertices)
    throw InputError("capacity list length differs from the vertex count");
  std::vector<double> weight;
  for (const auto& e : g.edges) {
    if (e.u >= g.vertices || e.v >= g.vertices) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loops are not allowed");
    check_weight(e.weight, "edge weight");
    weight.push_back(e.weight);
  }
  std::vector<unsigned> cap = g.capacities;
  if (cap.empty()) cap.assign(g.vertices, 1U);
  auto edges = g.edges;
  auto f = [edges, weight, cap](const Subset& s) -> Value {
    check_cap(s.size(), kMatchingCap, "matching edge subset");
    std::vector<unsigned> load(cap.size(), 0U);
    return pack_search(
        s.indices(), weight,
        [&](std::size_t x) { return load[edges[x].u] < cap[edges[x].u] && load[edges[x].v] < cap[edges[x].v]; },
        [&](std::size_t x) { ++load[edges[x].u], ++load[edges[x].v]; },
        [&](std::size_t x) { --load[edges[x].u], --load[edges[x].v]; });
  };
  return IncrementalInstance(g.edges.size(), std::move(f), std::move(label), {false, true});
}

namespace {

void validate_system(const SetSystem& sys) {
  if (sys.sets.empty()) throw InputError("set system has no sets");
  for (const auto& set : sys.sets)
    for (std::size_t e : set)
      if (e >= sys.universe) throw InputError("set member outside the universe");
  auto check_list = [](const std::vector<double>& w, std::size_t n, const char* what) {
    if (!w.empty() && w.size() != n) throw InputError(std::string(what) + " list has the wrong length");
    for (double x : w) check_weight(x, what);
  };
  check_list(sys.set_weights, sys.sets.size(), "set weight");
  check_list(sys.element_weights, sys.universe, "element weight");
  check_list(sys.opening_costs, sys.sets.size(), "opening cost");
}

std::vector<std::vector<std::size_t>> dedup_sets(const SetSystem& sys) {
  auto sets = sys.sets;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

}  // namespace

IncrementalInstance set_packing_objective(const SetSystem& sys, std::string label) {
  validate_system(sys);
  auto sets = dedup_sets(sys);
  std::vector<double> weight = sys.set_weights;
  if (weight.empty()) weight.assign(sets.size(), 1.0);
  const std::size_t universe = sys.universe;
  auto f = [sets, weight, universe](const Subset& s) -> Value {
    check_cap(s.size(), kSetFamilyCap, "set-packing subfamily");
    std::vector<char> used(universe, 0);
    return pack_search(
        s.indices(), weight,
        [&](std::size_t x) {
          return std::none_of(sets[x].begin(), sets[x].end(), [&](std::size_t e) { return used[e] != 0; });
        },
        [&](std::size_t x) {
          for (std::size_t e : sets[x]) used[e] = 1;
        },
        [&](std::size_t x) {
          for (std::size_t e : sets[x]) used[e] = 0;
        });
  };
  return IncrementalInstance(sets.size(), std::move(f), std::move(label), {false, true});
}

IncrementalInstance coverage_objective(const SetSystem& sys, std::string label) {
  validate_system(sys);
  auto sets = dedup_sets(sys);
  std::vector<double> ew = sys.element_weights;
  if (ew.empty()) ew.assign(sys.universe, 1.0);
  const std::size_t universe = sys.universe;

  if (sys.opening_costs.empty()) {
    auto f = [sets, ew, universe](const Subset& s) -> Value {
      std::vector<char> covered(universe, 0);
      double total = 0;
      s.for_each([&](std::size_t x) {
        for (std::size_t e : sets[x])
          if (!covered[e]) {
            covered[e] = 1;
            total += ew[e];
          }
      });
      return total;
    };
    return IncrementalInstance(sets.size(), std::move(f), std::move(label), {false, true});
  }

  std::vector<double> cost = sys.opening_costs;
  auto f = [sets, ew, cost, universe](const Subset& s) -> Value {
    check_cap(s.size(), kSetFamilyCap, "coverage subfamily");
    std::vector<std::size_t> items;
    s.for_each([&](std::size_t x) {
      double w = 0;
      for (std::size_t e : sets[x]) w += ew[e];
      if (w > cost[x]) items.push_back(x);  // never worth opening otherwise
    });
    std::vector<double> gain(sets.size(), 0.0);
    for (std::size_t x : items) {
      for (std::size_t e : sets[x]) gain[x] += ew[e];
      gain[x] -= cost[x];
    }
    std::vector<double> suffix(items.size() + 1, 0.0);
    for (std::size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + gain[items[i]];

    std::vector<unsigned> count(universe, 0U);
    double best = 0;
    auto dfs = [&](auto&& self, std::size_t pos, double acc) -> void {
      if (acc > best) best = acc;
      if (pos == items.size() || acc + suffix[pos] <= best) return;
      const std::size_t x = items[pos];
      double delta = -cost[x];
      for (std::size_t e : sets[x])
        if (count[e]++ == 0) delta += ew[e];
      self(self, pos + 1, acc + delta);
      for (std::size_t e : sets[x]) --count[e];
      self(self, pos + 1, acc);
    };
    dfs(dfs, 0, 0.0);
    return best;
  };
  return IncrementalInstance(sets.size(), std::move(f), std::move(label), {false, true});
}

IncrementalInstance disjoint_paths_objective(const PathSystem& ps, std::string label) {
  if (ps.pairs.empty()) throw InputError("path system has no demand pairs");
  auto has_edge = [&](std::size_t a, std::size_t b) {
    return std::any_of(ps.edges.begin(), ps.edges.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  };
  for (const auto& e : ps.edges)
    if (e.first >= ps.vertices || e.second >= ps.vertices) throw InputError("edge endpoint out of range");

  std::vector<double> weight;
  std::vector<std::vector<std::vector<std::size_t>>> paths;
  for (const auto& p : ps.pairs) {
    check_weight(p.weight, "pair weight");
    if (p.source >= ps.vertices || p.target >= ps.vertices) throw InputError("pair endpoint out of range");
    if (p.candidate_paths.empty()) throw InputError("demand pair without candidate paths");
    check_cap(p.candidate_paths.size(), kCandidatePathCap, "candidate paths per pair");
    for (const auto& path : p.candidate_paths) {
      if (path.empty() || path.front() != p.source || path.back() != p.target)
        throw InputError("candidate path does not connect its pair");
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!has_edge(path[i], path[i + 1])) throw InputError("candidate path uses a missing edge");
      std::vector<std::size_t> sorted = path;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("candidate path repeats a vertex");
    }
    weight.push_back(p.weight);
    paths.push_back(p.candidate_paths);
  }

  const std::size_t nv = ps.vertices;
  auto f = [weight, paths, nv](const Subset& s) -> Value {
    check_cap(s.size(), kPathPairCap, "demand-pair subset");
    std::vector<std::size_t> order = s.indices();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
    std::vector<double> suffix(order.size() + 1, 0.0);
    for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weight[order[i]];

    std::vector<char> used(nv, 0);
    double best = 0;
    auto dfs = [&](auto&& self, std::size_t pos, double acc) -> void {
      if (acc > best) best = acc;
      if (pos == order.size() || acc + suffix[pos] <= best) return;
      const std::size_t x = order[pos];
      for (const auto& path : paths[x]) {
        if (std::any_of(path.begin(), path.end(), [&](std::size_t v) { return used[v] != 0; })) continue;
        for (std::size_t v : path) used[v] = 1;
        self(self, pos + 1, acc + weight[x]);
        for (std::size_t v : path) used[v] = 0;
      }
      self(self, pos + 1, acc);
    };
    dfs(dfs, 0, 0.0);
    return best;
  };
  return IncrementalInstance(ps.pairs.size(), std::move(f), std::move(label), {false, true});
}

double RegionSpec::density(std::size_t i) const {
  if (i < 1 || i > regions) throw InputError("region index out of range");
  if (beta) return std::pow(static_cast<double>(i), *beta - 1.0);
  return densities[i - 1];
}

void RegionSpec::validate() const {
  if (regions < 1) throw InputError("region count must be at least 1");
  if (beta) {
    if (!(*beta > 0 && *beta < 1)) throw InputError("beta must lie in (0,1)");
    if (!densities.empty()) throw InputError("give either beta or an explicit density list");
  } else {
    if (densities.size() != regions) throw InputError("density list length differs from the region count");
    for (double d : densities) check_weight(d, "region density");
  }
}

IncrementalInstance region_choosing_objective(const RegionSpec& spec, std::string label) {
  spec.validate();
  std::vector<double> delta(spec.regions);
  std::vector<std::size_t> region_of(spec.ground_size());
  for (std::size_t i = 1; i <= spec.regions; ++i) {
    delta[i - 1] = spec.density(i);
    for (std::size_t j = 0; j < i; ++j) region_of[spec.region_begin(i) + j] = i - 1;
  }
  auto f = [delta, region_of](const Subset& s) -> Value {
    constexpr std::size_t kInline = 64;
    std::array<std::uint32_t, kInline> small{};
    std::vector<std::uint32_t> large;
    std::uint32_t* count = small.data();
    if (delta.size() > kInline) {
      large.assign(delta.size(), 0);
      count = large.data();
    }
    s.for_each([&](std::size_t x) { ++count[region_of[x]]; });
    double best = 0;
    for (std::size_t i = 0; i < delta.size(); ++i)
      if (count[i] != 0) best = std::max(best, static_cast<double>(count[i]) * delta[i]);
    return best;
  };
  return IncrementalInstance(spec.ground_size(), std::move(f), std::move(label), {false, true});
}

IncrementalInstance table_objective(const TableObjective& table, std::string label) {
  if (table.elements < 1 || table.elements > 63) throw InputError("table objectives support 1..63 elements");
  std::unordered_map<std::uint64_t, Value> values;
  bool exact = true;
  for (const auto& [mask, v] : table.values) {
    if (mask >> table.elements) throw InputError("table mask has bits beyond the ground set");
    if (v.sign() < 0) throw InputError("table values must be nonnegative");
    exact = exact && v.is_exact();
    values[mask] = v;
  }
  auto f = [values = std::move(values), exact](const Subset& s) -> Value {
    auto it = values.find(s.mask());
    if (it != values.end()) return it->second;
    return exact ? Value::exact(0) : Value(0.0);
  };
  return IncrementalInstance(table.elements, std::move(f), std::move(label), {exact, false});
}

TableObjective tabulate(const IncrementalInstance& inst) {
  check_cap(inst.size(), kAccountableExhaustiveCap, "tabulated ground set");
  TableObjective t{inst.size(), {}};
  const std::uint64_t total = std::uint64_t{1} << inst.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    Value v = inst(Subset::from_mask(inst.size(), m));
    if (!v.is_zero()) t.values.emplace_back(m, std::move(v));
  }
  return t;
}

}  // namespace incmax
