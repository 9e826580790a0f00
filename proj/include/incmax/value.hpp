#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace incmax {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Relative tolerance used wherever an inequality is asserted on float values.
inline constexpr double kRelTolerance = 1e-9;

/// Objective value: either a 64-bit float or an exact rational.
///
/// Arithmetic between two exact values stays exact; any operation that
/// involves a float value produces a float.
class Value {
 public:
  Value() : repr_(0.0) {}
  Value(double v) : repr_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Value(Rational r) : repr_(std::move(r)) {}

  static Value exact(Rational r) { return Value(std::move(r)); }
  static Value exact(std::int64_t num, std::int64_t den = 1);

  bool is_exact() const { return std::holds_alternative<Rational>(repr_); }
  double to_double() const;
  /// Only valid when is_exact().
  const Rational& rational() const { return std::get<Rational>(repr_); }
  /// Exact rational of the stored value (floats convert exactly).
  Rational to_rational() const;

  bool is_zero() const;
  int sign() const;

  /// "p/q" (or "p") for exact values, shortest round-trip decimal otherwise.
  std::string str() const;
  /// Parses "p/q", "p" (exact) or a decimal literal (float).
  static Value parse(std::string_view text);

  Value& operator+=(const Value& o);
  Value& operator-=(const Value& o);
  Value& operator*=(const Value& o);
  Value& operator/=(const Value& o);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }
  friend Value operator-(const Value& a);

  friend bool operator==(const Value& a, const Value& b);
  friend std::partial_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<double, Rational> repr_;
};

Value abs(const Value& v);
Value max(const Value& a, const Value& b);

/// Converts `v` to the arithmetic mode of `like` (exact stays exact when
/// `like` is exact).
Value same_mode(double v, bool exact);

/// lhs >= rhs, allowing `rel * max(|lhs|, |rhs|)` slack unless both sides
/// are exact, in which case the comparison is exact.
bool geq_tol(const Value& lhs, const Value& rhs, double rel = kRelTolerance);
inline bool leq_tol(const Value& lhs, const Value& rhs, double rel = kRelTolerance) {
  return geq_tol(rhs, lhs, rel);
}

std::string format_sig(double v, int digits = 9);

}  // namespace incmax
