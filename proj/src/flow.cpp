#include "incmax/objectives.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace incmax {

Capacity Capacity::parse(const std::string& text) {
  if (text == "inf" || text == "Infinity") return inf();
  const Value v = Value::parse(text);
  if (v.sign() < 0) throw InputError("capacity must be nonnegative");
  return of(v.to_rational());
}

void FlowNetwork::validate() const {
  if (vertices < 2) throw InputError("flow network needs at least two vertices");
  if (source >= vertices || sink >= vertices) throw InputError("source or sink out of range");
  if (source == sink) throw InputError("source and sink coincide");
  for (const auto& e : edges) {
    if (e.from >= vertices || e.to >= vertices) throw InputError("flow edge endpoint out of range");
    if (!e.capacity.infinite && e.capacity.value < 0) throw InputError("negative capacity");
  }
}

namespace {

bool usable(const std::vector<char>& enabled, std::size_t i) { return enabled.empty() || enabled[i] != 0; }

Rational infinity_surrogate(const FlowNetwork& net) {
  Rational total = 0;
  for (const auto& e : net.edges)
    if (!e.capacity.infinite) total += e.capacity.value;
  return total + 1;
}

void reject_unbounded(const FlowNetwork& net, const std::vector<char>& enabled) {
  std::vector<char> seen(net.vertices, 0);
  std::vector<std::size_t> stack{net.source};
  seen[net.source] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
      const auto& e = net.edges[i];
      if (e.from != v || !e.capacity.infinite || !usable(enabled, i) || seen[e.to]) continue;
      if (e.to == net.sink) throw InputError("an s-t path of infinite capacity makes the flow unbounded");
      seen[e.to] = 1;
      stack.push_back(e.to);
    }
  }
}

struct Arc {
  std::size_t to;
  std::size_t rev;
  Rational residual;
};

}  // namespace

Rational max_flow(const FlowNetwork& net, const std::vector<char>& enabled) {
  net.validate();
  if (!enabled.empty() && enabled.size() != net.edges.size()) throw InputError("edge mask has the wrong length");
  reject_unbounded(net, enabled);
  const Rational big = infinity_surrogate(net);

  std::vector<std::vector<Arc>> adj(net.vertices);
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    if (!usable(enabled, i) || e.from == e.to) continue;
    const Rational cap = e.capacity.infinite ? big : e.capacity.value;
    adj[e.from].push_back({e.to, adj[e.to].size(), cap});
    adj[e.to].push_back({e.from, adj[e.from].size() - 1, Rational(0)});
  }

  Rational total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> parent(net.vertices);
  while (true) {
    std::vector<char> seen(net.vertices, 0);
    std::deque<std::size_t> queue{net.source};
    seen[net.source] = 1;
    while (!queue.empty() && !seen[net.sink]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < adj[v].size(); ++a) {
        const Arc& arc = adj[v][a];
        if (seen[arc.to] || arc.residual <= 0) continue;
        seen[arc.to] = 1;
        parent[arc.to] = {v, a};
        queue.push_back(arc.to);
      }
    }
    if (!seen[net.sink]) break;

    Rational push = -1;
    for (std::size_t v = net.sink; v != net.source; v = parent[v].first) {
      const Arc& arc = adj[parent[v].first][parent[v].second];
      if (push < 0 || arc.residual < push) push = arc.residual;
    }
    for (std::size_t v = net.sink; v != net.source; v = parent[v].first) {
      Arc& arc = adj[parent[v].first][parent[v].second];
      arc.residual -= push;
      adj[arc.to][arc.rev].residual += push;
    }
    total += push;
  }
  return total;
}

Rational min_cut_by_enumeration(const FlowNetwork& net, const std::vector<char>& enabled) {
  net.validate();
  if (!enabled.empty() && enabled.size() != net.edges.size()) throw InputError("edge mask has the wrong length");
  constexpr std::size_t kMaxInner = 26;
  const std::size_t inner = net.vertices - 2;
  if (inner > kMaxInner) throw ResourceError("cut enumeration over too many vertices", inner, kMaxInner);
  reject_unbounded(net, enabled);
  const Rational big = infinity_surrogate(net);

  // Scale to integers so the Gray-code walk runs on machine words.
  BigInt lcm = 1;
  for (const auto& e : net.edges)
    if (!e.capacity.infinite) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(e.capacity.value));
  const Rational scaled_big = big * lcm;
  if (boost::multiprecision::numerator(scaled_big) > BigInt(std::numeric_limits<std::int64_t>::max() / 4) ||
      boost::multiprecision::denominator(scaled_big) != 1)
    throw ResourceError("capacities too large for integer cut enumeration", 0, 0);

  std::vector<std::size_t> slot(net.vertices, SIZE_MAX);
  for (std::size_t v = 0, j = 0; v < net.vertices; ++v)
    if (v != net.source && v != net.sink) slot[v] = j++;

  struct E {
    std::size_t from, to;
    std::int64_t cap;
  };
  std::vector<E> es;
  std::vector<std::vector<std::size_t>> touching(inner);
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    if (!usable(enabled, i) || e.from == e.to) continue;
    const Rational c = (e.capacity.infinite ? big : e.capacity.value) * lcm;
    es.push_back({e.from, e.to, boost::multiprecision::numerator(c).convert_to<std::int64_t>()});
    if (slot[e.from] != SIZE_MAX) touching[slot[e.from]].push_back(es.size() - 1);
    if (slot[e.to] != SIZE_MAX && e.to != e.from) touching[slot[e.to]].push_back(es.size() - 1);
  }

  std::vector<char> side(net.vertices, 0);  // 1 = source side
  side[net.source] = 1;
  auto crossing = [&](const E& e) { return side[e.from] == 1 && side[e.to] == 0 ? e.cap : std::int64_t{0}; };
  std::int64_t cut = 0;
  for (const auto& e : es) cut += crossing(e);
  std::int64_t best = cut;

  std::vector<std::size_t> vertex_of(inner);
  for (std::size_t v = 0; v < net.vertices; ++v)
    if (slot[v] != SIZE_MAX) vertex_of[slot[v]] = v;

  const std::uint64_t steps = inner == 0 ? 0 : (std::uint64_t{1} << inner) - 1;
  for (std::uint64_t g = 1; g <= steps; ++g) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(g));
    for (std::size_t ei : touching[j]) cut -= crossing(es[ei]);
    side[vertex_of[j]] ^= 1;
    for (std::size_t ei : touching[j]) cut += crossing(es[ei]);
    best = std::min(best, cut);
  }
  return Rational(best) / Rational(lcm);
}

void BridgeFlowInstance::validate() const {
  network.validate();
  if (source_side.size() != network.vertices) throw InputError("partition length differs from the vertex count");
  if (!source_side[network.source] || source_side[network.sink])
    throw InputError("source must lie in U and sink in W");
  std::vector<char> in_cut(network.edges.size(), 0);
  for (std::size_t i : cut) {
    if (i >= network.edges.size()) throw InputError("cut edge index out of range");
    if (in_cut[i]) throw InputError("cut lists an edge twice");
    in_cut[i] = 1;
  }
  for (std::size_t i = 0; i < network.edges.size(); ++i) {
    const auto& e = network.edges[i];
    const bool forward = source_side[e.from] && !source_side[e.to];
    const bool backward = !source_side[e.from] && source_side[e.to];
    if (backward) throw InputError("edge " + std::to_string(i) + " goes from W back to U");
    if (forward != static_cast<bool>(in_cut[i]))
      throw InputError("cut does not match the U->W edges at edge " + std::to_string(i));
  }
  if (cut.empty()) throw InputError("cut is empty");
}

std::vector<char> BridgeFlowInstance::enabled_edges(const Subset& s) const {
  std::vector<char> enabled(network.edges.size(), 1);
  for (std::size_t i : cut) enabled[i] = 0;
  s.for_each([&](std::size_t x) { enabled[cut[x]] = 1; });
  return enabled;
}

IncrementalInstance bridge_flow_objective(const BridgeFlowInstance& inst, std::string label) {
  inst.validate();
  // The full graph must have a bounded flow; subgraphs then do too.
  reject_unbounded(inst.network, {});
  auto f = [inst](const Subset& s) -> Value { return Value(max_flow(inst.network, inst.enabled_edges(s))); };
  return IncrementalInstance(inst.cut.size(), std::move(f), std::move(label), {true, true});
}

IncrementalInstance edge_flow_objective(const FlowNetwork& net, std::string label) {
  net.validate();
  if (net.edges.empty()) throw InputError("flow network has no edges");
  reject_unbounded(net, {});
  auto f = [net](const Subset& s) -> Value {
    std::vector<char> enabled(net.edges.size(), 0);
    s.for_each([&](std::size_t x) { enabled[x] = 1; });
    return Value(max_flow(net, enabled));
  };
  return IncrementalInstance(net.edges.size(), std::move(f), std::move(label), {true, false});
}

}  // namespace incmax
