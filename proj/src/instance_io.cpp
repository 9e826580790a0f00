#include "incmax/instance_io.hpp"

#include "incmax/adversarial.hpp"
#include "incmax/fixtures.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace incmax {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<InstanceKind, std::string>> kKinds = {
    {InstanceKind::knapsack, "knapsack"},
    {InstanceKind::matching, "matching"},
    {InstanceKind::set_packing, "set_packing"},
    {InstanceKind::coverage, "coverage"},
    {InstanceKind::disjoint_paths, "disjoint_paths"},
    {InstanceKind::region_choosing, "region_choosing"},
    {InstanceKind::bridge_flow, "bridge_flow"},
    {InstanceKind::table, "table"},
};

json capacity_json(const Capacity& c) { return c.str(); }

Capacity capacity_from(const json& j) {
  if (j.is_string()) return Capacity::parse(j.get<std::string>());
  if (j.is_number()) return Capacity::of(Value(j.get<double>()).to_rational());
  throw InputError("capacity must be a string or a number");
}

json value_json(const Value& v) {
  if (v.is_exact()) return v.str();
  return v.to_double();
}

Value value_from(const json& j) {
  if (j.is_string()) return Value::parse(j.get<std::string>());
  if (j.is_number()) return Value(j.get<double>());
  throw InputError("value must be a string or a number");
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
std::vector<T> opt_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<T>>();
}

json set_system_json(const SetSystem& s) {
  json j;
  j["universe"] = s.universe;
  j["sets"] = s.sets;
  if (!s.set_weights.empty()) j["set_weights"] = s.set_weights;
  if (!s.element_weights.empty()) j["element_weights"] = s.element_weights;
  if (!s.opening_costs.empty()) j["opening_costs"] = s.opening_costs;
  return j;
}

SetSystem set_system_from(const json& j) {
  SetSystem s;
  s.universe = field(j, "universe").get<std::size_t>();
  s.sets = field(j, "sets").get<std::vector<std::vector<std::size_t>>>();
  s.set_weights = opt_list<double>(j, "set_weights");
  s.element_weights = opt_list<double>(j, "element_weights");
  s.opening_costs = opt_list<double>(j, "opening_costs");
  return s;
}

json body_json(const InstanceDocument& doc) {
  json j;
  switch (doc.kind) {
    case InstanceKind::knapsack: {
      const auto& k = std::get<KnapsackInstance>(doc.body);
      j["items"] = json::array();
      for (const auto& it : k.items) j["items"].push_back({{"size", it.size}, {"value", it.value}});
      break;
    }
    case InstanceKind::matching: {
      const auto& g = std::get<WeightedGraph>(doc.body);
      j["vertices"] = g.vertices;
      j["edges"] = json::array();
      for (const auto& e : g.edges) j["edges"].push_back(json::array({e.u, e.v, e.weight}));
      if (!g.capacities.empty()) j["capacities"] = g.capacities;
      break;
    }
    case InstanceKind::set_packing:
    case InstanceKind::coverage:
      j = set_system_json(std::get<SetSystem>(doc.body));
      break;
    case InstanceKind::disjoint_paths: {
      const auto& p = std::get<PathSystem>(doc.body);
      j["vertices"] = p.vertices;
      j["edges"] = json::array();
      for (const auto& e : p.edges) j["edges"].push_back(json::array({e.first, e.second}));
      j["pairs"] = json::array();
      for (const auto& d : p.pairs)
        j["pairs"].push_back(
            {{"source", d.source}, {"target", d.target}, {"weight", d.weight}, {"paths", d.candidate_paths}});
      break;
    }
    case InstanceKind::region_choosing: {
      const auto& r = std::get<RegionSpec>(doc.body);
      j["regions"] = r.regions;
      if (r.beta) j["beta"] = *r.beta;
      else j["densities"] = r.densities;
      break;
    }
    case InstanceKind::bridge_flow: {
      const auto& b = std::get<BridgeFlowInstance>(doc.body);
      j["vertices"] = b.network.vertices;
      j["source"] = b.network.source;
      j["sink"] = b.network.sink;
      j["edges"] = json::array();
      for (const auto& e : b.network.edges) j["edges"].push_back(json::array({e.from, e.to, capacity_json(e.capacity)}));
      std::vector<std::size_t> side;
      for (std::size_t v = 0; v < b.source_side.size(); ++v)
        if (b.source_side[v]) side.push_back(v);
      j["source_side"] = side;
      j["cut"] = b.cut;
      break;
    }
    case InstanceKind::table: {
      const auto& t = std::get<TableObjective>(doc.body);
      j["elements"] = t.elements;
      j["values"] = json::object();
      for (const auto& [mask, v] : t.values) j["values"][std::to_string(mask)] = value_json(v);
      break;
    }
  }
  return j;
}

std::uint64_t parse_mask(const std::string& s) {
  std::uint64_t m = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), m);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw InputError("bad table mask '" + s + "'");
  return m;
}

void parse_body(InstanceDocument& doc, const json& j) {
  switch (doc.kind) {
    case InstanceKind::knapsack: {
      KnapsackInstance k;
      for (const auto& it : field(j, "items"))
        k.items.push_back({field(it, "size").get<double>(), field(it, "value").get<double>()});
      doc.body = k;
      break;
    }
    case InstanceKind::matching: {
      WeightedGraph g;
      g.vertices = field(j, "vertices").get<std::size_t>();
      for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw InputError("edge must be [u, v] or [u, v, w]");
        g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e.size() == 3 ? e[2].get<double>() : 1.0});
      }
      g.capacities = opt_list<unsigned>(j, "capacities");
      doc.body = g;
      break;
    }
    case InstanceKind::set_packing:
    case InstanceKind::coverage:
      doc.body = set_system_from(j);
      break;
    case InstanceKind::disjoint_paths: {
      PathSystem p;
      p.vertices = field(j, "vertices").get<std::size_t>();
      for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("path-system edge must be [a, b]");
        p.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
      }
      for (const auto& d : field(j, "pairs"))
        p.pairs.push_back({field(d, "source").get<std::size_t>(), field(d, "target").get<std::size_t>(),
                           field(d, "weight").get<double>(),
                           field(d, "paths").get<std::vector<std::vector<std::size_t>>>()});
      doc.body = p;
      break;
    }
    case InstanceKind::region_choosing: {
      RegionSpec r;
      r.regions = field(j, "regions").get<std::size_t>();
      if (j.contains("beta")) r.beta = j.at("beta").get<double>();
      r.densities = opt_list<double>(j, "densities");
      r.validate();
      doc.body = r;
      break;
    }
    case InstanceKind::bridge_flow: {
      BridgeFlowInstance b;
      b.network.vertices = field(j, "vertices").get<std::size_t>();
      b.network.source = field(j, "source").get<std::size_t>();
      b.network.sink = field(j, "sink").get<std::size_t>();
      for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 3) throw InputError("flow edge must be [from, to, capacity]");
        b.network.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), capacity_from(e[2])});
      }
      b.source_side.assign(b.network.vertices, 0);
      for (std::size_t v : field(j, "source_side").get<std::vector<std::size_t>>()) {
        if (v >= b.network.vertices) throw InputError("source_side vertex out of range");
        b.source_side[v] = 1;
      }
      b.cut = field(j, "cut").get<std::vector<std::size_t>>();
      b.validate();
      doc.body = b;
      break;
    }
    case InstanceKind::table: {
      TableObjective t;
      t.elements = field(j, "elements").get<std::size_t>();
      const json& values = field(j, "values");
      if (!values.is_object()) throw InputError("table values must be an object");
      for (const auto& [key, v] : values.items()) t.values.emplace_back(parse_mask(key), value_from(v));
      doc.body = t;
      break;
    }
  }
}

}  // namespace

std::string kind_name(InstanceKind kind) {
  for (const auto& [k, name] : kKinds)
    if (k == kind) return name;
  return "unknown";
}

InstanceKind parse_kind(const std::string& name) {
  for (const auto& [k, n] : kKinds)
    if (n == name) return k;
  throw InputError("unknown instance kind '" + name + "'");
}

std::string to_json(const InstanceDocument& doc) {
  json j;
  j["kind"] = kind_name(doc.kind);
  if (!doc.label.empty()) j["label"] = doc.label;
  const json body = body_json(doc);
  for (const auto& [key, v] : body.items()) j[key] = v;
  if (!doc.element_names.empty()) j["element_names"] = doc.element_names;
  return j.dump(2) + "\n";
}

InstanceDocument from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw InputError("instance document must be a JSON object");
    InstanceDocument doc;
    doc.kind = parse_kind(field(j, "kind").get<std::string>());
    if (j.contains("label")) doc.label = j.at("label").get<std::string>();
    doc.element_names = opt_list<std::string>(j, "element_names");
    parse_body(doc, j);
    return doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance document: ") + e.what());
  }
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void save_instance(const InstanceDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << to_json(doc);
}

IncrementalInstance build_instance(const InstanceDocument& doc) {
  const std::string label = doc.label.empty() ? kind_name(doc.kind) : doc.label;
  switch (doc.kind) {
    case InstanceKind::knapsack:
      return knapsack_objective(std::get<KnapsackInstance>(doc.body), label);
    case InstanceKind::matching:
      return matching_objective(std::get<WeightedGraph>(doc.body), label);
    case InstanceKind::set_packing:
      return set_packing_objective(std::get<SetSystem>(doc.body), label);
    case InstanceKind::coverage:
      return coverage_objective(std::get<SetSystem>(doc.body), label);
    case InstanceKind::disjoint_paths:
      return disjoint_paths_objective(std::get<PathSystem>(doc.body), label);
    case InstanceKind::region_choosing:
      return region_choosing_objective(std::get<RegionSpec>(doc.body), label);
    case InstanceKind::bridge_flow:
      return bridge_flow_objective(std::get<BridgeFlowInstance>(doc.body), label);
    case InstanceKind::table:
      return table_objective(std::get<TableObjective>(doc.body), label);
  }
  throw InputError("unknown instance kind");
}

// ---------------------------------------------------------------------------

std::pair<std::string, GeneratorParams> parse_generator_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (name.empty()) throw InputError("generator spec has no name");
  GeneratorParams params;
  if (colon == std::string::npos) return {name, params};
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("generator parameter '" + item + "' is not key=value");
    if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw InputError("generator parameter '" + item.substr(0, eq) + "' given twice");
  }
  return {name, params};
}

namespace {

class Params {
 public:
  Params(std::string gen, const GeneratorParams& p) : gen_(std::move(gen)), p_(p) {}

  std::size_t size(const std::string& key, std::optional<std::size_t> def = {}) {
    const auto* s = take(key);
    if (!s) return require(def, key);
    std::size_t v = 0;
    auto res = std::from_chars(s->data(), s->data() + s->size(), v);
    if (res.ec != std::errc() || res.ptr != s->data() + s->size())
      throw InputError(gen_ + ": parameter " + key + " must be a nonnegative integer");
    return v;
  }
  std::optional<double> real(const std::string& key) {
    const auto* s = take(key);
    if (!s) return std::nullopt;
    return Value::parse(*s).to_double();
  }
  double real(const std::string& key, double def) { return real(key).value_or(def); }
  bool flag(const std::string& key, bool def) {
    const auto* s = take(key);
    if (!s) return def;
    if (*s == "1" || *s == "true") return true;
    if (*s == "0" || *s == "false") return false;
    throw InputError(gen_ + ": parameter " + key + " must be true or false");
  }
  void done() const {
    for (const auto& [k, v] : p_)
      if (!used_.count(k)) throw InputError(gen_ + ": unknown parameter '" + k + "'");
  }

 private:
  const std::string* take(const std::string& key) {
    auto it = p_.find(key);
    if (it == p_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }
  std::size_t require(std::optional<std::size_t> def, const std::string& key) const {
    if (!def) throw InputError(gen_ + ": missing parameter " + key);
    return *def;
  }

  std::string gen_;
  const GeneratorParams& p_;
  std::set<std::string> used_;
};

std::string describe(const std::string& name, const GeneratorParams& params) {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

}  // namespace

InstanceDocument generate(const std::string& name, const GeneratorParams& params) {
  Params p(name, params);
  InstanceDocument doc;
  doc.label = describe(name, params);

  if (name == "region") {
    RegionSpec spec;
    spec.regions = p.size("N");
    spec.beta = p.real("beta", 0.86);
    spec.validate();
    doc.kind = InstanceKind::region_choosing;
    doc.body = spec;
  } else if (name == "gk") {
    const GkInstance g = gen_bridge_flow_gk(p.size("k"));
    doc.kind = InstanceKind::bridge_flow;
    doc.body = g.bridge;
    doc.element_names = g.element_names;
  } else if (name == "knapsack_trap") {
    const std::size_t k = p.size("k");
    doc.kind = InstanceKind::knapsack;
    doc.body = gen_knapsack_trap(k, p.real("eps"));
  } else if (name == "independent_set_trap") {
    const std::size_t k = p.size("k");
    doc.kind = InstanceKind::set_packing;
    doc.body = gen_independent_set_trap(k, p.real("eps"));
  } else if (name == "disjoint_paths_trap") {
    const std::size_t k = p.size("k");
    doc.kind = InstanceKind::disjoint_paths;
    doc.body = gen_disjoint_paths_trap(k, p.real("eps"));
  } else if (name == "fig1") {
    doc.kind = InstanceKind::table;
    doc.body = tabulate(edge_flow_objective(fig1_network()));
    doc.element_names = {"(s,v)", "(v,t)", "(s,t)"};
  } else if (name == "p3") {
    doc.kind = InstanceKind::matching;
    doc.body = p3_graph();
    doc.element_names = {"e1", "e2", "e3"};
  } else if (name == "fig3") {
    doc.kind = InstanceKind::bridge_flow;
    doc.body = fig3_bridge();
    doc.element_names = {"e1", "e2", "e3"};
  } else if (name == "random_knapsack") {
    doc.kind = InstanceKind::knapsack;
    doc.body = random_knapsack(p.size("n", 8), p.size("seed", 1));
  } else if (name == "random_matching") {
    doc.kind = InstanceKind::matching;
    const std::size_t v = p.size("vertices", 6);
    const std::size_t e = p.size("edges", 8);
    const std::size_t b = p.size("b", 1);
    doc.body = random_matching(v, e, p.size("seed", 1), static_cast<unsigned>(b));
  } else if (name == "random_coverage") {
    doc.kind = InstanceKind::coverage;
    const std::size_t sets = p.size("sets", 6);
    const std::size_t universe = p.size("universe", 8);
    const bool costs = p.flag("costs", false);
    doc.body = random_coverage(sets, universe, p.size("seed", 1), costs);
  } else if (name == "random_set_packing") {
    doc.kind = InstanceKind::set_packing;
    const std::size_t sets = p.size("sets", 6);
    const std::size_t universe = p.size("universe", 8);
    doc.body = random_set_packing(sets, universe, p.size("seed", 1));
  } else if (name == "random_bridge_flow") {
    doc.kind = InstanceKind::bridge_flow;
    const std::size_t u = p.size("u", 3);
    const std::size_t w = p.size("w", 3);
    doc.body = random_bridge_flow(u, w, p.size("seed", 1));
  } else {
    throw InputError("unknown generator '" + name + "'");
  }
  p.done();
  return doc;
}

InstanceDocument generate(const std::string& spec) {
  const auto [name, params] = parse_generator_spec(spec);
  return generate(name, params);
}

std::vector<std::string> generator_names() {
  return {"region",         "gk",   "knapsack_trap", "independent_set_trap", "disjoint_paths_trap",
          "fig1",           "p3",   "fig3",          "random_knapsack",      "random_matching",
          "random_coverage", "random_set_packing", "random_bridge_flow"};
}

}  // namespace incmax
