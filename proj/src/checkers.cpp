#include "incmax/core.hpp"

#include <bit>
#include <cstdio>
#include <random>

namespace incmax {

std::string property_name(Property p, double alpha) {
  switch (p) {
    case Property::monotone:
      return "monotone";
    case Property::subadditive:
      return "subadditive";
    case Property::accountable:
      return "accountable";
    case Property::submodular:
      return "submodular";
    case Property::alpha_augmentable: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "alpha_augmentable(%g)", alpha);
      return buf;
    }
  }
  return "unknown";
}

std::string verdict_name(Verdict v) { return v == Verdict::holds ? "holds" : "fails"; }

std::string PropertyReport::name() const { return property_name(property, alpha); }

namespace {

Value count_value(std::size_t c, bool exact) { return same_mode(static_cast<double>(c), exact); }

// Violation predicates shared by the exhaustive scans, the sampled scans and
// witness reproduction.

bool monotone_ok(const Value& fs, const Value& ft) { return leq_tol(fs, ft); }

bool subadditive_ok(const Value& fs, const Value& ft, const Value& fu) { return geq_tol(fs + ft, fu); }

bool submodular_ok(const Value& fs, const Value& ft, const Value& fu, const Value& fi) {
  return geq_tol(fs + ft, fu + fi);
}

// |S| f(S \ {s}) >= (|S| - 1) f(S)
bool accountable_step_ok(const Value& f_without, const Value& fs, std::size_t size, bool exact) {
  return geq_tol(count_value(size, exact) * f_without, count_value(size - 1, exact) * fs);
}

// d (f(S+t) - f(S)) + alpha f(S) >= f(S u T)
bool augment_step_ok(const Value& gain, const Value& fs, const Value& fu, const Value& alpha,
                     std::size_t denom, bool exact) {
  return geq_tol(count_value(denom, exact) * gain + alpha * fs, fu);
}

bool accountable_ok(const IncrementalInstance& inst, const Subset& s) {
  if (s.empty()) return true;
  const Value fs = inst(s);
  bool ok = false;
  s.for_each([&](std::size_t x) {
    if (!ok && accountable_step_ok(inst(s.without(x)), fs, s.size(), inst.exact())) ok = true;
  });
  return ok;
}

bool augment_ok(const IncrementalInstance& inst, const Subset& s, const Subset& t, double alpha,
                bool by_difference) {
  const Subset diff = t - s;
  if (diff.empty()) return true;
  const Value fs = inst(s);
  const Value fu = inst(s | t);
  const Value a = same_mode(alpha, inst.exact());
  const std::size_t denom = by_difference ? diff.size() : t.size();
  bool ok = false;
  diff.for_each([&](std::size_t x) {
    if (!ok && augment_step_ok(inst(s.with(x)) - fs, fs, fu, a, denom, inst.exact())) ok = true;
  });
  return ok;
}

bool use_exhaustive(const IncrementalInstance& inst, const CheckOptions& opt, std::size_t cap,
                    const char* what) {
  const std::size_t n = inst.size();
  switch (opt.mode) {
    case CheckMode::sampled:
      return false;
    case CheckMode::automatic:
      return n <= cap;
    case CheckMode::exhaustive:
      if (n > cap)
        throw ResourceError(std::string("exhaustive ") + what + " check needs a ground set of at most " +
                                std::to_string(cap) + " elements",
                            n, cap);
      return true;
  }
  return true;
}

std::vector<Value> value_table(const IncrementalInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<Value> f(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < f.size(); ++m) f[m] = inst(Subset::from_mask(n, m));
  return f;
}

Subset random_subset(std::size_t n, std::mt19937_64& rng) {
  Subset s(n);
  for (std::size_t i = 0; i < n; i += 64) {
    const std::uint64_t bits = rng();
    for (std::size_t j = 0; j < 64 && i + j < n; ++j)
      if ((bits >> j) & 1U) s.insert(i + j);
  }
  return s;
}

PropertyReport make_report(Property p, double alpha, bool exhaustive) {
  PropertyReport r;
  r.property = p;
  r.alpha = alpha;
  r.exhaustive = exhaustive;
  return r;
}

void fail(PropertyReport& r, Subset s, std::optional<Subset> t) {
  r.verdict = Verdict::fails;
  r.witness_s = std::move(s);
  r.witness_t = std::move(t);
}

}  // namespace

PropertyReport check_monotone(const IncrementalInstance& inst, const CheckOptions& opt) {
  const std::size_t n = inst.size();
  const bool exhaustive = use_exhaustive(inst, opt, kMonotoneExhaustiveCap, "monotonicity");
  PropertyReport r = make_report(Property::monotone, 0, exhaustive);
  if (exhaustive) {
    const auto f = value_table(inst);
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      for (std::size_t x = 0; x < n; ++x) {
        if ((s >> x) & 1U) continue;
        ++r.pairs_checked;
        const std::uint64_t t = s | (std::uint64_t{1} << x);
        if (!monotone_ok(f[s], f[t])) {
          fail(r, Subset::from_mask(n, s), Subset::from_mask(n, t));
          return r;
        }
      }
    }
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    Subset s = random_subset(n, rng);
    if (s.size() == n) continue;
    std::size_t x = rng() % n;
    while (s.contains(x)) x = (x + 1) % n;
    ++r.pairs_checked;
    Subset t = s.with(x);
    if (!monotone_ok(inst(s), inst(t))) {
      fail(r, std::move(s), std::move(t));
      return r;
    }
  }
  return r;
}

PropertyReport check_subadditive(const IncrementalInstance& inst, const CheckOptions& opt) {
  const std::size_t n = inst.size();
  const bool exhaustive = use_exhaustive(inst, opt, kPairwiseExhaustiveCap, "sub-additivity");
  PropertyReport r = make_report(Property::subadditive, 0, exhaustive);
  if (exhaustive) {
    const auto f = value_table(inst);
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      for (std::uint64_t t = 0; t < f.size(); ++t) {
        ++r.pairs_checked;
        if (!subadditive_ok(f[s], f[t], f[s | t])) {
          fail(r, Subset::from_mask(n, s), Subset::from_mask(n, t));
          return r;
        }
      }
    }
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    Subset s = random_subset(n, rng);
    Subset t = random_subset(n, rng);
    ++r.pairs_checked;
    if (!subadditive_ok(inst(s), inst(t), inst(s | t))) {
      fail(r, std::move(s), std::move(t));
      return r;
    }
  }
  return r;
}

PropertyReport check_accountable(const IncrementalInstance& inst, const CheckOptions& opt) {
  const std::size_t n = inst.size();
  const bool exhaustive = use_exhaustive(inst, opt, kAccountableExhaustiveCap, "accountability");
  PropertyReport r = make_report(Property::accountable, 0, exhaustive);
  if (exhaustive) {
    const auto f = value_table(inst);
    for (std::uint64_t s = 1; s < f.size(); ++s) {
      ++r.pairs_checked;
      const auto size = static_cast<std::size_t>(std::popcount(s));
      bool ok = false;
      for (std::uint64_t m = s; m != 0 && !ok; m &= m - 1) {
        const std::uint64_t without = s & ~(m & (~m + 1));
        ok = accountable_step_ok(f[without], f[s], size, inst.exact());
      }
      if (!ok) {
        fail(r, Subset::from_mask(n, s), std::nullopt);
        return r;
      }
    }
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    Subset s = random_subset(n, rng);
    if (s.empty()) continue;
    ++r.pairs_checked;
    if (!accountable_ok(inst, s)) {
      fail(r, std::move(s), std::nullopt);
      return r;
    }
  }
  return r;
}

PropertyReport check_alpha_augmentable(const IncrementalInstance& inst, double alpha,
                                       const CheckOptions& opt) {
  if (!(alpha > 0)) throw InputError("alpha must be positive");
  const std::size_t n = inst.size();
  const bool exhaustive = use_exhaustive(inst, opt, kPairwiseExhaustiveCap, "augmentability");
  PropertyReport r = make_report(Property::alpha_augmentable, alpha, exhaustive);
  if (exhaustive) {
    const auto f = value_table(inst);
    const Value a = same_mode(alpha, inst.exact());
    std::vector<Value> gain(n);
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      for (std::size_t x = 0; x < n; ++x)
        if (!((s >> x) & 1U)) gain[x] = f[s | (std::uint64_t{1} << x)] - f[s];
      for (std::uint64_t t = 1; t < f.size(); ++t) {
        const std::uint64_t diff = t & ~s;
        if (diff == 0) continue;
        ++r.pairs_checked;
        const auto denom = static_cast<std::size_t>(std::popcount(opt.augment_by_difference ? diff : t));
        bool ok = false;
        for (std::uint64_t m = diff; m != 0 && !ok; m &= m - 1)
          ok = augment_step_ok(gain[std::countr_zero(m)], f[s], f[s | t], a, denom, inst.exact());
        if (!ok) {
          fail(r, Subset::from_mask(n, s), Subset::from_mask(n, t));
          return r;
        }
      }
    }
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    Subset s = random_subset(n, rng);
    Subset t = random_subset(n, rng);
    if ((t - s).empty()) continue;
    ++r.pairs_checked;
    if (!augment_ok(inst, s, t, alpha, opt.augment_by_difference)) {
      fail(r, std::move(s), std::move(t));
      return r;
    }
  }
  return r;
}

PropertyReport check_submodular(const IncrementalInstance& inst, const CheckOptions& opt) {
  const std::size_t n = inst.size();
  const bool exhaustive = use_exhaustive(inst, opt, kPairwiseExhaustiveCap, "submodularity");
  PropertyReport r = make_report(Property::submodular, 0, exhaustive);
  if (exhaustive) {
    const auto f = value_table(inst);
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      for (std::uint64_t t = 0; t < f.size(); ++t) {
        ++r.pairs_checked;
        if (!submodular_ok(f[s], f[t], f[s | t], f[s & t])) {
          fail(r, Subset::from_mask(n, s), Subset::from_mask(n, t));
          return r;
        }
      }
    }
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    Subset s = random_subset(n, rng);
    Subset t = random_subset(n, rng);
    ++r.pairs_checked;
    if (!submodular_ok(inst(s), inst(t), inst(s | t), inst(s & t))) {
      fail(r, std::move(s), std::move(t));
      return r;
    }
  }
  return r;
}

bool is_incremental(const IncrementalInstance& inst, const CheckOptions& opt) {
  return check_monotone(inst, opt).holds() && check_subadditive(inst, opt).holds() &&
         check_accountable(inst, opt).holds();
}

bool reproduces_violation(const IncrementalInstance& inst, const PropertyReport& report,
                          const CheckOptions& opt) {
  if (report.holds() || !report.witness_s) return false;
  const Subset& s = *report.witness_s;
  switch (report.property) {
    case Property::monotone:
      return report.witness_t && s.is_subset_of(*report.witness_t) &&
             !monotone_ok(inst(s), inst(*report.witness_t));
    case Property::subadditive: {
      const Subset& t = *report.witness_t;
      return !subadditive_ok(inst(s), inst(t), inst(s | t));
    }
    case Property::accountable:
      return !accountable_ok(inst, s);
    case Property::alpha_augmentable:
      return !augment_ok(inst, s, *report.witness_t, report.alpha, opt.augment_by_difference);
    case Property::submodular: {
      const Subset& t = *report.witness_t;
      return !submodular_ok(inst(s), inst(t), inst(s | t), inst(s & t));
    }
  }
  return false;
}

}  // namespace incmax
