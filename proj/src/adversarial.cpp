#include "incmax/adversarial.hpp"

#include "incmax/algorithms.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace incmax {

RegionInstance gen_region_choosing(std::size_t regions, double beta) {
  RegionSpec spec;
  spec.regions = regions;
  spec.beta = beta;
  spec.validate();
  auto inst = region_choosing_objective(spec, "region:N=" + std::to_string(regions) + ",beta=" + format_sig(beta));
  return {spec, std::move(inst)};
}

double h_function(double rho, double beta, double eps, double x) {
  if (!(rho >= 1)) throw InputError("rho must be at least 1");
  if (!(beta > 0 && beta < 1)) throw InputError("beta must lie in (0,1)");
  if (!(eps > 0)) throw InputError("eps must be positive");
  const double top = std::pow(rho, 1.0 / beta);
  if (!(x > 1 && x <= top)) throw InputError("x outside (1, rho^(1/beta)]");
  const double base = top + eps - x;
  return std::pow(base, 1.0 / (1.0 - beta)) - x / (x - 1.0 + eps);
}

std::string ProblematicPairCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["rho"] = rho;
  j["beta"] = beta;
  j["eps"] = eps;
  j["grid_points"] = grid_points;
  j["max_sampled"] = max_sampled;
  j["worst_x"] = worst_x;
  j["sup_bound"] = sup_bound;
  j["verdict"] = certified ? "certified" : "not-certified";
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

ProblematicPairCertificate certify_problematic(double rho, double beta, std::size_t grid) {
  if (!(rho >= 1)) throw InputError("rho must be at least 1");
  if (!(beta > 0 && beta < 1)) throw InputError("beta must lie in (0,1)");
  if (grid < 1) throw InputError("grid must have at least one cell");
  ProblematicPairCertificate best;
  best.rho = rho;
  best.beta = beta;
  best.grid_points = grid;
  const double top = std::pow(rho, 1.0 / beta);
  if (!(top > 1)) {
    best.note = "empty domain: rho^(1/beta) <= 1";
    best.sup_bound = std::numeric_limits<double>::infinity();
    best.max_sampled = std::numeric_limits<double>::quiet_NaN();
    return best;
  }

  // Absorbs rounding in pow and the divisions.
  constexpr double kMargin = 1e-12;
  const double expo = 1.0 / (1.0 - beta);
  bool have = false;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    auto first = [&](double x) { return std::pow(top + eps - x, expo); };
    auto second = [&](double x) { return x / (x - 1.0 + eps); };
    const double width = (top - 1.0) / static_cast<double>(grid);

    ProblematicPairCertificate c = best;
    c.eps = eps;
    c.sup_bound = -std::numeric_limits<double>::infinity();
    c.max_sampled = -std::numeric_limits<double>::infinity();
    auto sample = [&](double x) {
      const double h = first(x) - second(x);
      if (h > c.max_sampled) {
        c.max_sampled = h;
        c.worst_x = x;
      }
    };
    sample(1.0 + 1e-9);
    for (std::size_t j = 0; j < grid; ++j) {
      const double a = 1.0 + width * static_cast<double>(j);
      const double b = j + 1 == grid ? top : 1.0 + width * static_cast<double>(j + 1);
      c.sup_bound = std::max(c.sup_bound, first(a) - second(b));
      sample(b);
    }
    c.sup_bound += kMargin;
    c.certified = c.sup_bound < 0;
    if (c.certified) return c;
    if (!have || c.sup_bound < best.sup_bound) {
      best = c;
      have = true;
    }
  }
  return best;
}

void ScheduleSequence::validate() const {
  if (k.empty()) throw InputError("schedule sequence is empty");
  if (k.front() < 1) throw InputError("region indices start at 1");
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i] <= k[i - 1]) throw InputError("schedule sequence must be strictly increasing");
}

Rational ScheduleSequence::alpha(std::size_t i) const {
  BigInt sum = 0;
  for (std::size_t j = 0; j <= i; ++j) sum += k.at(j);
  return Rational(sum, BigInt(k.at(i)));
}

Rational ScheduleSequence::q(std::size_t i) const {
  if (i < 1) throw InputError("q is defined from i = 1 on");
  return Rational(BigInt(k.at(i)), BigInt(k.at(i - 1)));
}

std::string ScheduleSequence::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + "]";
}

ScheduleCheck check_schedule_condition(const ScheduleSequence& seq, double rho, double beta) {
  seq.validate();
  if (!(rho >= 1)) throw InputError("rho must be at least 1");
  if (!(beta > 0 && beta < 1)) throw InputError("beta must lie in (0,1)");
  const Rational limit(std::pow(rho, 1.0 / beta));
  for (std::size_t i = 0; i < seq.k.size(); ++i)
    if (seq.alpha(i) > limit) return {false, i};
  return {};
}

double structured_worst_ratio(const ScheduleSequence& seq, std::size_t regions, double beta) {
  seq.validate();
  if (seq.k.back() > regions) throw InputError("schedule names a region beyond N");
  std::vector<std::size_t> fill = seq.k;
  for (std::size_t r = 1; r <= regions; ++r)
    if (!std::binary_search(seq.k.begin(), seq.k.end(), r)) fill.push_back(r);

  double worst = 1;
  double best_region_value = 0;
  std::size_t c = 0;
  for (std::size_t r : fill) {
    const double delta = std::pow(static_cast<double>(r), beta - 1.0);
    for (std::size_t j = 1; j <= r; ++j) {
      ++c;
      const double alg = std::max(best_region_value, static_cast<double>(j) * delta);
      const double opt = std::pow(static_cast<double>(std::min(c, regions)), beta);
      worst = std::max(worst, opt / alg);
    }
    best_region_value = std::max(best_region_value, static_cast<double>(r) * delta);
  }
  return worst;
}

RegionSchedule best_region_schedule(std::size_t regions, double beta, std::size_t cap) {
  if (regions < 1) throw InputError("region count must be at least 1");
  if (!(beta > 0 && beta < 1)) throw InputError("beta must lie in (0,1)");
  if (regions > cap) throw ResourceError("region search beyond its budget", regions, cap);
  const std::size_t n = regions * (regions + 1) / 2;
  std::vector<double> value(regions + 1, 0.0);
  std::vector<double> delta(regions + 1, 0.0);
  for (std::size_t i = 1; i <= regions; ++i) {
    value[i] = std::pow(static_cast<double>(i), beta);
    delta[i] = value[i] / static_cast<double>(i);
  }
  auto opt = [&](std::size_t c) { return value[std::min(c, regions)]; };

  // worst[kp][P]: best achievable worst ratio from here on, having filled
  // regions up to kp (largest) with P elements.
  const double unset = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> worst(regions + 1, std::vector<double>(n + 1, unset));
  std::vector<std::vector<std::size_t>> choice(regions + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t kp = regions; kp-- > 0;) {
    for (std::size_t p = 0; p + kp < n; ++p) {
      for (std::size_t k = kp + 1; k <= regions && p + k <= n; ++k) {
        double seg = 1;
        for (std::size_t j = 1; j <= k; ++j)
          seg = std::max(seg, opt(p + j) / std::max(value[kp], static_cast<double>(j) * delta[k]));
        const double total = k == regions ? seg : std::max(seg, worst[k][p + k]);
        if (total < worst[kp][p]) {
          worst[kp][p] = total;
          choice[kp][p] = k;
        }
      }
    }
  }

  RegionSchedule out;
  out.worst_ratio = worst[0][0];
  for (std::size_t kp = 0, p = 0; kp != regions;) {
    const std::size_t k = choice[kp][p];
    out.sequence.k.push_back(k);
    p += k;
    kp = k;
  }
  return out;
}

Rational gk_base(std::size_t k) {
  if (k < 2) throw InputError("G_k needs k >= 2");
  return Rational(static_cast<long>(k), static_cast<long>(k - 1));
}

namespace {

Rational rpow(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

GkInstance gen_bridge_flow_gk(std::size_t k) {
  if (k < 2) throw InputError("G_k needs k >= 2");
  constexpr std::size_t kMaxK = 64;
  if (k > kMaxK) throw ResourceError("G_k generator size", k, kMaxK);
  const Rational q = gk_base(k);
  const std::size_t s = 0, t = 1;
  auto v1 = [&](std::size_t i) { return 2 + (i - 1); };
  auto v4 = [&](std::size_t i) { return 2 + 2 * k + (i - 1); };
  auto v2 = [&](std::size_t i) { return 2 + 4 * k + (i - 1); };
  auto v3 = [&](std::size_t i) { return 2 + 8 * k + (i - 1); };

  GkInstance g;
  g.k = k;
  FlowNetwork& net = g.bridge.network;
  net.vertices = 2 + 12 * k;
  net.source = s;
  net.sink = t;
  std::vector<std::size_t> cut_edge_of(4 * k + 1, 0);
  auto add = [&](std::size_t a, std::size_t b, Capacity c) {
    net.edges.push_back({a, b, std::move(c)});
    return net.edges.size() - 1;
  };

  for (std::size_t i = 1; i <= k; ++i) {
    add(s, v2(i), Capacity::of(1));
    add(v3(3 * k + i), t, Capacity::of(1));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    add(s, v2(3 * k + i), Capacity::inf());
    cut_edge_of[i] = add(v2(i), v3(i), Capacity::inf());
    cut_edge_of[3 * k + i] = add(v2(3 * k + i), v3(3 * k + i), Capacity::inf());
    add(v3(i), t, Capacity::inf());
  }
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    const Rational u = rpow(q, 2 * k + 1 - i);
    add(s, v1(i), Capacity::of(u));
    add(v1(i), v2(k + i), Capacity::of(u));
    cut_edge_of[k + i] = add(v2(k + i), v3(k + i), Capacity::of(u));
    add(v3(k + i), v4(i), Capacity::of(u));
    add(v4(i), t, Capacity::of(u));
  }
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    const Rational u = rpow(q, 2 * k + 1 - i) / static_cast<long>(k);
    for (std::size_t j = 1; j <= k; ++j) {
      add(v1(i), v2(j), Capacity::of(u));
      add(v3(3 * k + j), v4(i), Capacity::of(u));
    }
  }

  g.bridge.source_side.assign(net.vertices, 0);
  g.bridge.source_side[s] = 1;
  for (std::size_t i = 1; i <= 2 * k; ++i) g.bridge.source_side[v1(i)] = 1;
  for (std::size_t i = 1; i <= 4 * k; ++i) g.bridge.source_side[v2(i)] = 1;

  std::vector<std::size_t> order;
  for (std::size_t i = k + 1; i <= 3 * k; ++i) order.push_back(i);
  for (std::size_t i = 1; i <= k; ++i) order.push_back(i);
  for (std::size_t i = 3 * k + 1; i <= 4 * k; ++i) order.push_back(i);
  for (std::size_t i : order) {
    g.bridge.cut.push_back(cut_edge_of[i]);
    g.cut_vertex_index.push_back(i);
    g.element_names.push_back("(v2_" + std::to_string(i) + ",v3_" + std::to_string(i) + ")");
  }
  g.bridge.validate();
  return g;
}

Rational gk_greedy_value(std::size_t k, std::size_t j) {
  const Rational q = gk_base(k);
  if (j > 2 * k) throw InputError("greedy steps on G_k follow the closed form up to 2k");
  Rational sum = 0;
  for (std::size_t i = 2 * k + 1 - j; i <= 2 * k; ++i) sum += rpow(q, i);
  return sum;
}

Rational gk_optimum_value(std::size_t k) {
  return Rational(2 * static_cast<long>(k - 1)) * rpow(gk_base(k), 2 * k + 1);
}

Rational gk_ratio_closed_form(std::size_t k) {
  const Rational p = rpow(gk_base(k), 2 * k);
  return 2 * p / (p - 1);
}

Subset gk_optimum_witness(const GkInstance& g) {
  Subset s(4 * g.k);
  for (std::size_t e = 2 * g.k; e < 4 * g.k; ++e) s.insert(e);
  return s;
}

GkRow gk_greedy_row(std::size_t k) {
  const GkInstance g = gen_bridge_flow_gk(k);
  const IncrementalInstance inst = bridge_flow_objective(g.bridge, "gk:k=" + std::to_string(k));
  const GreedyRun run = greedy(inst, 2 * k);

  GkRow row;
  row.k = k;
  row.trace_matches = true;
  Value acc = Value::exact(0);
  for (std::size_t j = 1; j <= 2 * k; ++j) {
    acc += run.trace.steps[j - 1].gain;
    if (run.order.sequence[j - 1] != j - 1 || acc.rational() != gk_greedy_value(k, j)) row.trace_matches = false;
  }
  row.greedy_value = acc.rational();
  const Value witness = inst(gk_optimum_witness(g));
  const Value full = inst(Subset::full(inst.size()));
  // f is monotone, so the full graph bounds every 2k-subset from above.
  if (witness != full) throw std::logic_error("G_k witness does not attain the full-graph flow");
  row.optimum_value = witness.rational();
  row.ratio = row.optimum_value / row.greedy_value;
  row.matches_closed_form = row.ratio == gk_ratio_closed_form(k) && row.optimum_value == gk_optimum_value(k);
  return row;
}

double default_trap_eps(std::size_t k) {
  if (k < 1) throw InputError("trap size must be at least 1");
  return 1.0 / (4.0 * static_cast<double>(k));
}

namespace {

double trap_eps(std::size_t k, std::optional<double> eps) {
  const double cap = default_trap_eps(k);
  const double e = eps.value_or(cap);
  if (!(e > 0 && e <= cap)) throw InputError("trap eps must lie in (0, 1/(4k)]");
  return e;
}

}  // namespace

KnapsackInstance gen_knapsack_trap(std::size_t k, std::optional<double> eps) {
  const double e = trap_eps(k, eps);
  KnapsackInstance inst;
  inst.items.push_back({1 - e, 1 - e});
  for (std::size_t i = 0; i < k; ++i) inst.items.push_back({2 * e, 1 - 2 * e});
  for (std::size_t i = 0; i < k; ++i) inst.items.push_back({e * e, e * e});
  return inst;
}

SetSystem gen_independent_set_trap(std::size_t k, std::optional<double> eps) {
  const double e = trap_eps(k, eps);
  SetSystem sys;
  sys.universe = k;  // one element per star edge
  std::vector<std::size_t> center(k);
  for (std::size_t j = 0; j < k; ++j) center[j] = j;
  sys.sets.push_back(center);
  sys.set_weights.push_back(1 - e);
  for (std::size_t j = 0; j < k; ++j) {
    sys.sets.push_back({j});
    sys.set_weights.push_back(1 - 2 * e);
  }
  for (std::size_t j = 0; j < k; ++j) {
    sys.sets.push_back({});
    sys.set_weights.push_back(e * e);
  }
  return sys;
}

PathSystem gen_disjoint_paths_trap(std::size_t k, std::optional<double> eps) {
  const double e = trap_eps(k, eps);
  PathSystem ps;
  const std::size_t path_vertices = 2 * k;
  ps.vertices = path_vertices + 2 * k;
  std::vector<std::size_t> full(path_vertices);
  for (std::size_t v = 0; v < path_vertices; ++v) full[v] = v;
  for (std::size_t v = 0; v + 1 < path_vertices; ++v) ps.edges.emplace_back(v, v + 1);
  ps.pairs.push_back({0, path_vertices - 1, 1 - e, {full}});
  for (std::size_t v = 0; v + 1 < path_vertices; ++v) ps.pairs.push_back({v, v + 1, 1 - 2 * e, {{v, v + 1}}});
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t a = path_vertices + 2 * j;
    ps.edges.emplace_back(a, a + 1);
    ps.pairs.push_back({a, a + 1, e * e, {{a, a + 1}}});
  }
  return ps;
}

FlowNetwork fig1_network() {
  FlowNetwork net;
  net.vertices = 3;  // s, v, t
  net.source = 0;
  net.sink = 2;
  net.edges = {{0, 1, Capacity::of(1)}, {1, 2, Capacity::of(1)}, {0, 2, Capacity::of(kFig1Eps)}};
  return net;
}

WeightedGraph p3_graph() {
  WeightedGraph g;
  g.vertices = 4;
  g.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  return g;
}

BridgeFlowInstance fig3_bridge() {
  BridgeFlowInstance b;
  FlowNetwork& net = b.network;
  net.vertices = 4;  // s, v1, v2, t
  net.source = 0;
  net.sink = 3;
  net.edges = {{0, 2, Capacity::of(1)},   // e1
               {1, 2, Capacity::of(1)},   // e2
               {1, 3, Capacity::of(1)},   // e3
               {0, 1, Capacity::of(1)},
               {2, 3, Capacity::of(1)}};
  b.source_side = {1, 1, 0, 0};
  b.cut = {0, 1, 2};
  return b;
}

std::vector<WitnessFixture> gen_witnesses() {
  auto sub = [](std::size_t n, std::initializer_list<std::size_t> idx) { return Subset::from_indices(n, idx); };
  std::vector<WitnessFixture> out;

  out.push_back({"fig1",
                 edge_flow_objective(fig1_network(), "fig1"),
                 {{Property::monotone, 0, Verdict::holds, {}, {}},
                  {Property::subadditive, 0, Verdict::fails, sub(3, {0}), sub(3, {1})},
                  {Property::accountable, 0, Verdict::fails, sub(3, {0, 1}), {}}}});

  out.push_back({"p3",
                 matching_objective(p3_graph(), "p3"),
                 {{Property::monotone, 0, Verdict::holds, {}, {}},
                  {Property::subadditive, 0, Verdict::holds, {}, {}},
                  {Property::accountable, 0, Verdict::holds, {}, {}},
                  {Property::submodular, 0, Verdict::fails, sub(3, {0, 1}), sub(3, {1, 2})},
                  {Property::alpha_augmentable, 1, Verdict::fails, sub(3, {1}), sub(3, {0, 2})},
                  {Property::alpha_augmentable, 2, Verdict::holds, {}, {}}}});

  out.push_back({"fig3",
                 bridge_flow_objective(fig3_bridge(), "fig3"),
                 {{Property::monotone, 0, Verdict::holds, {}, {}},
                  {Property::subadditive, 0, Verdict::holds, {}, {}},
                  {Property::accountable, 0, Verdict::holds, {}, {}},
                  {Property::submodular, 0, Verdict::fails, sub(3, {0, 1}), sub(3, {1, 2})},
                  {Property::alpha_augmentable, 2, Verdict::holds, {}, {}}}});
  return out;
}

}  // namespace incmax
