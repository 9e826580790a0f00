#include "incmax/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace incmax {

IncrementalInstance::IncrementalInstance(std::size_t n, Objective objective, std::string label,
                                         ObjectiveTraits traits)
    : ground_{n}, objective_(std::move(objective)), label_(std::move(label)), traits_(traits) {
  if (n == 0) throw InputError("ground set must contain at least one element");
  if (!objective_) throw InputError("objective function is empty");
}

Value evaluate(const IncrementalInstance& inst, const Subset& s) {
  if (s.universe() != inst.size())
    throw InputError("subset drawn from a ground set of size " + std::to_string(s.universe()) +
                     ", instance has " + std::to_string(inst.size()));
  return inst(s);
}

Value evaluate(const IncrementalInstance& inst, std::span<const std::size_t> indices) {
  return inst(Subset::from_indices(inst.size(), indices));
}

Subset IncrementalOrder::prefix(std::size_t universe, std::size_t k) const {
  if (k > sequence.size()) throw InputError("prefix longer than the order");
  return Subset::from_indices(universe, std::span<const std::size_t>(sequence.data(), k));
}

void validate_order(const IncrementalOrder& order, std::size_t n) {
  if (order.sequence.size() > n) throw InputError("order is longer than the ground set");
  std::vector<char> seen(n, 0);
  for (std::size_t e : order.sequence) {
    if (e >= n) throw InputError("order entry " + std::to_string(e) + " out of range");
    if (seen[e]) throw InputError("order contains element " + std::to_string(e) + " twice");
    seen[e] = 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

OptimumResult brute_force_optimum(const IncrementalInstance& inst, std::size_t k, std::uint64_t budget) {
  const std::size_t n = inst.size();
  if (k < 1 || k > n)
    throw InputError("cardinality " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const std::uint64_t count = binomial(n, k);
  if (count > budget) throw ResourceError("brute-force enumeration exceeds budget", count, budget);

  // Combinations in lexicographic order; the first maximizer is the
  // lexicographically smallest one.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const bool use_mask = n <= 64;
  std::uint64_t mask = 0;
  if (use_mask)
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;

  auto current = [&]() {
    return use_mask ? Subset::from_mask(n, mask) : Subset::from_indices(n, idx);
  };

  OptimumResult best{current(), Value()};
  best.value = inst(best.set);
  while (true) {
    // advance
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
    if (pos == 0) break;
    --pos;
    if (use_mask) mask &= ~(std::uint64_t{1} << idx[pos]);
    ++idx[pos];
    if (use_mask) mask |= std::uint64_t{1} << idx[pos];
    for (std::size_t j = pos + 1; j < k; ++j) {
      if (use_mask) mask &= ~(std::uint64_t{1} << idx[j]);
      idx[j] = idx[j - 1] + 1;
      if (use_mask) mask |= std::uint64_t{1} << idx[j];
    }
    Subset s = current();
    Value v = inst(s);
    if (v > best.value) {
      best.value = std::move(v);
      best.set = std::move(s);
    }
  }
  return best;
}

OptimumTable optimum_table(const IncrementalInstance& inst, std::size_t k_max, std::uint64_t budget) {
  if (k_max < 1 || k_max > inst.size()) throw InputError("k_max outside 1..n");
  std::vector<OptimumResult> rows;
  rows.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) rows.push_back(brute_force_optimum(inst, k, budget));

  if (inst.traits().incremental) {
    for (std::size_t k = 2; k <= k_max; ++k) {
      // v*_k / k <= v*_{k-1} / (k-1)  <=>  (k-1) v*_k <= k v*_{k-1}
      const Value lhs = rows[k - 1].value * Value::exact(static_cast<std::int64_t>(k - 1));
      const Value rhs = rows[k - 2].value * Value::exact(static_cast<std::int64_t>(k));
      if (!leq_tol(lhs, rhs)) throw AccountabilityViolation(rows[k - 1].set.indices());
    }
  }
  return OptimumTable(std::move(rows));
}

Value density(const IncrementalInstance& inst, const Subset& s) {
  if (s.empty()) throw InputError("density of the empty set is undefined");
  const Value f = evaluate(inst, s);
  return f / same_mode(static_cast<double>(s.size()), f.is_exact());
}

std::vector<std::size_t> greedy_order(const IncrementalInstance& inst, const Subset& s) {
  if (s.empty()) throw InputError("greedy order of the empty set");
  if (s.universe() != inst.size()) throw InputError("subset does not belong to this ground set");

  Subset rest = s;
  std::vector<std::size_t> removed;
  removed.reserve(s.size());
  while (!rest.empty()) {
    const Value f = inst(rest);
    const Value threshold = f - f / same_mode(static_cast<double>(rest.size()), f.is_exact());
    std::optional<std::size_t> pick;
    Value best;
    rest.for_each([&](std::size_t x) {
      Value v = inst(rest.without(x));
      if (!pick || v > best) {
        pick = x;
        best = std::move(v);
      }
    });
    if (!geq_tol(best, threshold)) throw AccountabilityViolation(rest.indices());
    removed.push_back(*pick);
    rest.erase(*pick);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

Ratio Ratio::of(const Value& opt, const Value& alg) {
  Ratio r;
  if (alg.sign() > 0) {
    r.value = opt / alg;
  } else if (opt.sign() > 0) {
    r.infinite = true;
    r.value = Value(std::numeric_limits<double>::infinity());
  } else {
    r.value = same_mode(1.0, opt.is_exact() && alg.is_exact());
  }
  return r;
}

double Ratio::to_double() const {
  return infinite ? std::numeric_limits<double>::infinity() : value.to_double();
}

std::string Ratio::str() const { return infinite ? "inf" : value.str(); }

bool operator==(const Ratio& a, const Ratio& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return a.value == b.value;
}

std::partial_ordering operator<=>(const Ratio& a, const Ratio& b) {
  if (a.infinite || b.infinite) {
    if (a.infinite && b.infinite) return std::partial_ordering::equivalent;
    return a.infinite ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  return a.value <=> b.value;
}

bool CompetitivenessReport::within(double bound, double rel) const {
  if (worst_ratio.infinite) return false;
  return worst_ratio.value.to_double() <= bound * (1.0 + rel);
}

CompetitivenessReport competitive_ratio(const IncrementalInstance& inst, const IncrementalOrder& order,
                                        const OptimumTable& table) {
  validate_order(order, inst.size());
  if (order.size() < table.k_max())
    throw InputError("order has " + std::to_string(order.size()) + " entries but the table reaches k=" +
                     std::to_string(table.k_max()));
  CompetitivenessReport report;
  Subset prefix(inst.size());
  bool first = true;
  for (std::size_t k = 1; k <= table.k_max(); ++k) {
    prefix.insert(order.sequence[k - 1]);
    RatioRow row{k, inst(prefix), table.value(k), {}};
    row.ratio = Ratio::of(row.opt_value, row.alg_value);
    if (first || row.ratio > report.worst_ratio) {
      report.worst_ratio = row.ratio;
      report.argmax_k = k;
      first = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace incmax
