#include "cli.hpp"

#include "incmax/adversarial.hpp"
#include "incmax/algorithms.hpp"
#include "incmax/instance_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace incmax::cli {

namespace {

using json = nlohmann::ordered_json;

struct Source {
  std::string gen;
  std::string instance;
};

struct Loaded {
  InstanceDocument doc;
  IncrementalInstance inst;
};

Loaded load(const Source& src) {
  if (src.gen.empty() == src.instance.empty()) throw InputError("give exactly one of --gen and --instance");
  InstanceDocument doc = src.gen.empty() ? load_instance(src.instance) : generate(src.gen);
  IncrementalInstance inst = build_instance(doc);
  return {std::move(doc), std::move(inst)};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("INCMAX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("INCMAX_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultEnumerationBudget;
}

json number_json(const Value& v) {
  if (v.is_exact()) return v.str();
  const double d = v.to_double();
  if (std::isinf(d)) return "inf";
  return d;
}

json ratio_json(const Ratio& r) { return r.infinite ? json("inf") : number_json(r.value); }

std::string csv_num(const Value& v) { return format_sig(v.to_double()); }
std::string csv_ratio(const Ratio& r) { return r.infinite ? "inf" : csv_num(r.value); }

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  Source src;
  std::string alg = "both";
  std::size_t k_max = 0;
  std::string out;
  std::string format = "csv";
  std::optional<double> alpha;
  std::uint64_t budget = 0;
};

struct AlgorithmResult {
  std::string name;
  IncrementalOrder order;
  CompetitivenessReport report;
  std::optional<double> bound;
  bool satisfied = true;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  const Loaded l = load(o.src);
  const std::size_t n = l.inst.size();
  const std::size_t k_max = o.k_max == 0 ? n : o.k_max;
  if (k_max > n) throw InputError("--kmax exceeds the ground-set size " + std::to_string(n));
  const OptimumTable table = optimum_table(l.inst, k_max, o.budget);

  std::vector<AlgorithmResult> results;
  if (o.alg == "phase" || o.alg == "both") {
    const CardinalityOracle base = exact_oracle(l.inst, o.budget);
    const CardinalityOracle cached = [&](std::size_t k) {
      return k <= table.k_max() ? table.rows()[k - 1] : base(k);
    };
    AlgorithmResult r{"phase", phase_algorithm(l.inst, k_max, cached).order, {}, kPhaseBound, true};
    results.push_back(std::move(r));
  }
  if (o.alg == "greedy" || o.alg == "both") {
    AlgorithmResult r{"greedy", greedy(l.inst, k_max).order, {}, {}, true};
    if (o.alpha) r.bound = greedy_bound(*o.alpha);
    results.push_back(std::move(r));
  }
  bool all_ok = true;
  for (auto& r : results) {
    r.report = competitive_ratio(l.inst, r.order, table);
    if (r.bound) r.satisfied = r.report.within(*r.bound);
    all_ok = all_ok && r.satisfied;
  }

  Sink sink(o.out, out);
  std::ostream& os = sink.os();
  if (o.format == "json") {
    json j;
    j["instance"] = l.inst.label();
    j["n"] = n;
    j["k_max"] = k_max;
    j["runs"] = json::array();
    for (const auto& r : results) {
      json run;
      run["algorithm"] = r.name;
      run["order"] = r.order.sequence;
      run["rows"] = json::array();
      for (const auto& row : r.report.rows)
        run["rows"].push_back({{"k", row.k},
                               {"alg_value", number_json(row.alg_value)},
                               {"opt_value", number_json(row.opt_value)},
                               {"ratio", ratio_json(row.ratio)}});
      run["worst_ratio"] = ratio_json(r.report.worst_ratio);
      run["argmax_k"] = r.report.argmax_k;
      run["bound"] = r.bound ? json(*r.bound) : json(nullptr);
      run["bound_satisfied"] = r.satisfied;
      j["runs"].push_back(run);
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      os << "# instance=" << l.inst.label() << " algorithm=" << r.name << "\n";
      os << "k,alg_value,opt_value,ratio\n";
      for (const auto& row : r.report.rows)
        os << row.k << ',' << csv_num(row.alg_value) << ',' << csv_num(row.opt_value) << ',' << csv_ratio(row.ratio)
           << "\n";
      os << "# worst_ratio=" << csv_ratio(r.report.worst_ratio) << " argmax_k=" << r.report.argmax_k
         << " bound=" << (r.bound ? format_sig(*r.bound) : std::string("none"))
         << " bound_satisfied=" << (r.satisfied ? "true" : "false") << "\n";
    }
  }
  return all_ok ? kOk : kBoundViolated;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  Source src;
  std::vector<double> alphas{2.0};
  std::string mode = "exhaustive";
  std::uint64_t trials = 200'000;
  std::uint64_t seed = 1;
  bool by_difference = false;
  std::string expect;
  std::string out;
  std::string format = "csv";
};

std::map<std::string, std::string> read_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open expectation file '" + path + "'");
  try {
    const json j = json::parse(in);
    if (!j.is_object()) throw InputError("expectation file must be a JSON object");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) {
      const std::string s = v.get<std::string>();
      if (s != "holds" && s != "fails") throw InputError("expected verdict must be holds or fails");
      out[k] = s;
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed expectation file: ") + e.what());
  }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o.src);
  CheckOptions opt;
  if (o.mode == "sampled") opt.mode = CheckMode::sampled;
  else if (o.mode == "auto") opt.mode = CheckMode::automatic;
  opt.trials = o.trials;
  opt.seed = o.seed;
  opt.augment_by_difference = o.by_difference;

  std::vector<PropertyReport> reports;
  reports.push_back(check_monotone(l.inst, opt));
  reports.push_back(check_subadditive(l.inst, opt));
  reports.push_back(check_accountable(l.inst, opt));
  reports.push_back(check_submodular(l.inst, opt));
  for (double a : o.alphas) reports.push_back(check_alpha_augmentable(l.inst, a, opt));

  bool ok = true;
  if (!o.expect.empty()) {
    const auto expected = read_expectations(o.expect);
    for (const auto& [name, verdict] : expected) {
      auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.name() == name; });
      if (it == reports.end()) {
        err << "expectation names an unchecked property: " << name << "\n";
        ok = false;
      } else if (verdict_name(it->verdict) != verdict) {
        err << "mismatch: " << name << " expected " << verdict << ", got " << verdict_name(it->verdict) << "\n";
        ok = false;
      }
    }
  }

  auto names = [&](const std::optional<Subset>& s) {
    if (!s) return std::string();
    if (l.doc.element_names.size() != l.inst.size()) return s->str();
    std::string txt = "{";
    bool first = true;
    s->for_each([&](std::size_t i) {
      txt += (first ? "" : ";") + l.doc.element_names[i];
      first = false;
    });
    return txt + "}";
  };

  Sink sink(o.out, out);
  std::ostream& os = sink.os();
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : reports) {
      json row{{"property", r.name()},
               {"verdict", verdict_name(r.verdict)},
               {"pairs_checked", r.pairs_checked},
               {"exhaustive", r.exhaustive}};
      if (r.witness_s) row["witness_s"] = r.witness_s->indices();
      if (r.witness_t) row["witness_t"] = r.witness_t->indices();
      j.push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "# instance=" << l.inst.label() << "\n";
    os << "property,verdict,witness_s,witness_t,pairs_checked,exhaustive\n";
    for (const auto& r : reports)
      os << r.name() << ',' << verdict_name(r.verdict) << ",\"" << names(r.witness_s) << "\",\""
         << names(r.witness_t) << "\"," << r.pairs_checked << ',' << (r.exhaustive ? "true" : "false") << "\n";
  }
  return ok ? kOk : kBoundViolated;
}

// ---------------------------------------------------------------------------
// lowerbound

struct LowerBoundOptions {
  std::string mode;
  double rho = 2.18;
  double beta = 0.86;
  std::size_t grid = kCertificateGrid;
  std::vector<std::size_t> regions{5, 10, 20, 40};
  std::size_t kmin = 2;
  std::size_t kmax = 6;
  std::string out;
  std::string format = "csv";
};

int cmd_lowerbound(const LowerBoundOptions& o, std::ostream& out) {
  Sink sink(o.out, out);
  std::ostream& os = sink.os();

  if (o.mode == "problematic-pair") {
    const auto cert = certify_problematic(o.rho, o.beta, o.grid);
    os << cert.to_json() << "\n";
    return cert.certified ? kOk : kBoundViolated;
  }

  if (o.mode == "region-search") {
    json rows = json::array();
    if (o.format == "csv") os << "N,worst_ratio,sequence\n";
    for (std::size_t n : o.regions) {
      const RegionSchedule r = best_region_schedule(n, o.beta);
      if (o.format == "csv")
        os << n << ',' << format_sig(r.worst_ratio) << ",\"" << r.sequence.str() << "\"\n";
      else
        rows.push_back({{"N", n}, {"beta", o.beta}, {"worst_ratio", r.worst_ratio}, {"sequence", r.sequence.k}});
    }
    if (o.format == "json") os << rows.dump(2) << "\n";
    return kOk;
  }

  if (o.mode == "gk-table") {
    if (o.kmin < 2 || o.kmax < o.kmin) throw InputError("gk-table needs 2 <= kmin <= kmax");
    const double limit = greedy_bound(2.0);
    bool ok = true;
    json rows = json::array();
    if (o.format == "csv") os << "k,greedy_value,optimum_value,ratio,ratio_decimal,closed_form_match,trace_match\n";
    for (std::size_t k = o.kmin; k <= o.kmax; ++k) {
      const GkRow r = gk_greedy_row(k);
      ok = ok && r.matches_closed_form && r.trace_matches;
      const double dec = r.ratio.convert_to<double>();
      if (o.format == "csv") {
        os << k << ',' << r.greedy_value.str() << ',' << r.optimum_value.str() << ',' << r.ratio.str() << ','
           << format_sig(dec) << ',' << (r.matches_closed_form ? "true" : "false") << ','
           << (r.trace_matches ? "true" : "false") << "\n";
      } else {
        rows.push_back({{"k", k},
                        {"greedy_value", r.greedy_value.str()},
                        {"optimum_value", r.optimum_value.str()},
                        {"ratio", r.ratio.str()},
                        {"ratio_decimal", dec},
                        {"closed_form_match", r.matches_closed_form},
                        {"trace_match", r.trace_matches}});
      }
    }
    if (o.format == "csv") {
      os << "# limit=" << format_sig(limit) << "\n";
    } else {
      os << json{{"rows", rows}, {"limit", limit}}.dump(2) << "\n";
    }
    return ok ? kOk : kBoundViolated;
  }

  throw InputError("unknown lowerbound mode '" + o.mode + "'");
}

// ---------------------------------------------------------------------------

int cmd_generate(const std::string& spec, const std::string& path, std::ostream& out) {
  const InstanceDocument doc = generate(spec);
  build_instance(doc);  // validates
  Sink sink(path, out);
  sink.os() << to_json(doc);
  return kOk;
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--gen", src.gen, "Generator spec, e.g. region:N=8,beta=0.86");
  cmd->add_option("--instance", src.instance, "Instance file (JSON)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incremental maximization: algorithms, checkers and lower-bound instances", "incmax"};
  app.require_subcommand(1);

  RunOptions run_opt;
  std::string budget_text;
  auto* run_cmd = app.add_subcommand("run", "Run the phase and/or greedy algorithm against brute-force optima");
  add_source(run_cmd, run_opt.src);
  run_cmd->add_option("--alg", run_opt.alg)->check(CLI::IsMember({"phase", "greedy", "both"}));
  run_cmd->add_option("--kmax", run_opt.k_max, "Largest cardinality (default: n)")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run_opt.out);
  run_cmd->add_option("--format", run_opt.format)->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--alpha", run_opt.alpha, "Check greedy against alpha e^alpha/(e^alpha-1)");
  run_cmd->add_option("--budget", budget_text, "Enumeration budget (default $INCMAX_BUDGET or 5e7)");

  VerifyOptions ver_opt;
  auto* ver_cmd = app.add_subcommand("verify", "Check monotonicity, sub-additivity, accountability and more");
  add_source(ver_cmd, ver_opt.src);
  ver_cmd->add_option("--alpha", ver_opt.alphas, "Augmentability parameters (default 2)");
  ver_cmd->add_option("--mode", ver_opt.mode)->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
  ver_cmd->add_option("--trials", ver_opt.trials);
  ver_cmd->add_option("--seed", ver_opt.seed);
  ver_cmd->add_flag("--by-difference", ver_opt.by_difference, "Divide by |T \\ S| in the augmentability test");
  ver_cmd->add_option("--expect", ver_opt.expect, "JSON object mapping property names to holds/fails");
  ver_cmd->add_option("--out", ver_opt.out);
  ver_cmd->add_option("--format", ver_opt.format)->check(CLI::IsMember({"csv", "json"}));

  LowerBoundOptions lb_opt;
  auto* lb_cmd = app.add_subcommand("lowerbound", "Lower-bound machinery");
  lb_cmd->add_option("--mode", lb_opt.mode)
      ->required()
      ->check(CLI::IsMember({"problematic-pair", "region-search", "gk-table"}));
  lb_cmd->add_option("--rho", lb_opt.rho);
  lb_cmd->add_option("--beta", lb_opt.beta);
  lb_cmd->add_option("--grid", lb_opt.grid);
  lb_cmd->add_option("--regions", lb_opt.regions, "Region counts for region-search");
  lb_cmd->add_option("--kmin", lb_opt.kmin);
  lb_cmd->add_option("--kmax", lb_opt.kmax);
  lb_cmd->add_option("--out", lb_opt.out);
  lb_cmd->add_option("--format", lb_opt.format)->check(CLI::IsMember({"csv", "json"}));

  std::string gen_spec;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated instance as JSON");
  gen_cmd->add_option("--gen", gen_spec)->required();
  gen_cmd->add_option("--out", gen_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*run_cmd) {
      if (budget_text.empty()) {
        run_opt.budget = default_budget();
      } else {
        run_opt.budget = std::stoull(budget_text);
        if (run_opt.budget == 0) throw InputError("--budget must be positive");
      }
      return cmd_run(run_opt, out);
    }
    if (*ver_cmd) return cmd_verify(ver_opt, out, err);
    if (*lb_cmd) return cmd_lowerbound(lb_opt, out);
    if (*gen_cmd) return cmd_generate(gen_spec, gen_out, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AccountabilityViolation& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace incmax::cli
