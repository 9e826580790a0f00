#pragma once

#include "incmax/errors.hpp"
#include "incmax/subset.hpp"
#include "incmax/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace incmax {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

struct GroundSet {
  std::size_t n = 0;
};

/// Pure set function on subsets of the ground set.
using Objective = std::function<Value(const Subset&)>;

struct ObjectiveTraits {
  /// Values are exact rationals; comparisons use no tolerance.
  bool exact = false;
  /// Monotone, sub-additive and accountable by construction.
  bool incremental = false;
};

class IncrementalInstance {
 public:
  IncrementalInstance(std::size_t n, Objective objective, std::string label,
                      ObjectiveTraits traits = {});

  std::size_t size() const { return ground_.n; }
  const GroundSet& ground() const { return ground_; }
  const std::string& label() const { return label_; }
  const ObjectiveTraits& traits() const { return traits_; }
  bool exact() const { return traits_.exact; }

  /// Unchecked evaluation; `s` must come from this ground set.
  Value operator()(const Subset& s) const { return objective_(s); }

  Subset empty_set() const { return Subset(ground_.n); }
  Subset make_subset(std::span<const std::size_t> indices) const {
    return Subset::from_indices(ground_.n, indices);
  }
  Subset make_subset(std::initializer_list<std::size_t> indices) const {
    return Subset::from_indices(ground_.n, indices);
  }

 private:
  GroundSet ground_;
  Objective objective_;
  std::string label_;
  ObjectiveTraits traits_;
};

Value evaluate(const IncrementalInstance& inst, const Subset& s);
Value evaluate(const IncrementalInstance& inst, std::span<const std::size_t> indices);

/// Duplicate-free sequence of element indices; S_k is the first k entries.
struct IncrementalOrder {
  std::vector<std::size_t> sequence;

  std::size_t size() const { return sequence.size(); }
  Subset prefix(std::size_t universe, std::size_t k) const;
};

/// Throws InputError on duplicates or out-of-range entries.
void validate_order(const IncrementalOrder& order, std::size_t n);

struct OptimumResult {
  Subset set;
  Value value;
};

/// Exhaustive maximum over all size-k subsets; ties go to the
/// lexicographically smallest subset.
OptimumResult brute_force_optimum(const IncrementalInstance& inst, std::size_t k,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class OptimumTable {
 public:
  OptimumTable() = default;
  explicit OptimumTable(std::vector<OptimumResult> rows) : rows_(std::move(rows)) {}

  std::size_t k_max() const { return rows_.size(); }
  const Value& value(std::size_t k) const { return rows_.at(k - 1).value; }
  const Subset& witness(std::size_t k) const { return rows_.at(k - 1).set; }
  const std::vector<OptimumResult>& rows() const { return rows_; }

 private:
  std::vector<OptimumResult> rows_;
};

/// v*_k for k = 1..k_max. For objectives flagged incremental, the density
/// v*_k / k is checked to be nonincreasing and a violation throws.
OptimumTable optimum_table(const IncrementalInstance& inst, std::size_t k_max,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// f(S) / |S|.
Value density(const IncrementalInstance& inst, const Subset& s);

/// Orders `s` so that prefix densities are nonincreasing, by repeatedly
/// peeling the element whose removal keeps the most value (smallest index
/// on ties) and reversing the removal sequence. Throws
/// AccountabilityViolation if no element can be peeled.
std::vector<std::size_t> greedy_order(const IncrementalInstance& inst, const Subset& s);

/// opt / alg, or infinite when alg = 0 < opt. Both zero gives 1.
struct Ratio {
  Value value{1.0};
  bool infinite = false;

  static Ratio of(const Value& opt, const Value& alg);
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Ratio& a, const Ratio& b);
  friend std::partial_ordering operator<=>(const Ratio& a, const Ratio& b);
};

struct RatioRow {
  std::size_t k = 0;
  Value alg_value;
  Value opt_value;
  Ratio ratio;
};

struct CompetitivenessReport {
  std::vector<RatioRow> rows;
  Ratio worst_ratio;
  std::size_t argmax_k = 0;

  /// worst_ratio <= bound (+ relative slack for float ratios).
  bool within(double bound, double rel = kRelTolerance) const;
};

CompetitivenessReport competitive_ratio(const IncrementalInstance& inst, const IncrementalOrder& order,
                                        const OptimumTable& table);

// ---------------------------------------------------------------------------
// Property checkers

enum class Property { monotone, subadditive, accountable, alpha_augmentable, submodular };
enum class Verdict { holds, fails };
enum class CheckMode { exhaustive, sampled, automatic };

struct CheckOptions {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t trials = 200'000;
  std::uint64_t seed = 1;
  /// Divide by |T \ S| instead of |T| in the augmentability inequality.
  bool augment_by_difference = false;
};

struct PropertyReport {
  Property property = Property::monotone;
  double alpha = 0;  // alpha_augmentable only
  Verdict verdict = Verdict::holds;
  /// Violating subset (accountable) or pair (S, T). For monotone, T = S + {x}.
  std::optional<Subset> witness_s;
  std::optional<Subset> witness_t;
  std::uint64_t pairs_checked = 0;
  bool exhaustive = true;

  bool holds() const { return verdict == Verdict::holds; }
  std::string name() const;
};

std::string property_name(Property p, double alpha = 0);
std::string verdict_name(Verdict v);

/// Size caps of the exhaustive checkers.
inline constexpr std::size_t kMonotoneExhaustiveCap = 14;
inline constexpr std::size_t kPairwiseExhaustiveCap = 10;
inline constexpr std::size_t kAccountableExhaustiveCap = 20;

PropertyReport check_monotone(const IncrementalInstance& inst, const CheckOptions& opt = {});
PropertyReport check_subadditive(const IncrementalInstance& inst, const CheckOptions& opt = {});
PropertyReport check_accountable(const IncrementalInstance& inst, const CheckOptions& opt = {});
PropertyReport check_alpha_augmentable(const IncrementalInstance& inst, double alpha,
                                       const CheckOptions& opt = {});
PropertyReport check_submodular(const IncrementalInstance& inst, const CheckOptions& opt = {});

/// Monotone, sub-additive and accountable all hold.
bool is_incremental(const IncrementalInstance& inst, const CheckOptions& opt = {});

/// Re-evaluates the witness and returns true if the stored violation is
/// reproduced.
bool reproduces_violation(const IncrementalInstance& inst, const PropertyReport& report,
                          const CheckOptions& opt = {});

}  // namespace incmax
