#include "incmax/value.hpp"

#include "incmax/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace incmax {

Value Value::exact(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Value(Rational(num, den));
}

double Value::to_double() const {
  if (const auto* d = std::get_if<double>(&repr_)) return *d;
  return std::get<Rational>(repr_).convert_to<double>();
}

Rational Value::to_rational() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return *r;
  const double d = std::get<double>(repr_);
  if (!std::isfinite(d)) throw InputError("non-finite value has no rational form");
  return Rational(d);
}

bool Value::is_zero() const { return sign() == 0; }

int Value::sign() const {
  if (const auto* d = std::get_if<double>(&repr_)) return (*d > 0) - (*d < 0);
  return std::get<Rational>(repr_).sign();
}

std::string Value::str() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->str();
  const double d = std::get<double>(repr_);
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

Value Value::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InputError("empty numeric literal");
  const bool rational_form =
      s.find_first_not_of("+-0123456789/") == std::string::npos;
  if (rational_form) {
    try {
      Rational r(s);
      return Value(std::move(r));
    } catch (const std::exception&) {
      throw InputError("malformed rational literal '" + s + "'");
    }
  }
  double d = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), d);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InputError("malformed numeric literal '" + s + "'");
  return Value(d);
}

Value& Value::operator+=(const Value& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(repr_) += o.rational();
  } else {
    repr_ = to_double() + o.to_double();
  }
  return *this;
}

Value& Value::operator-=(const Value& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(repr_) -= o.rational();
  } else {
    repr_ = to_double() - o.to_double();
  }
  return *this;
}

Value& Value::operator*=(const Value& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(repr_) *= o.rational();
  } else {
    repr_ = to_double() * o.to_double();
  }
  return *this;
}

Value& Value::operator/=(const Value& o) {
  if (is_exact() && o.is_exact()) {
    if (o.is_zero()) throw InputError("division by exact zero");
    std::get<Rational>(repr_) /= o.rational();
  } else {
    repr_ = to_double() / o.to_double();
  }
  return *this;
}

Value operator-(const Value& a) {
  if (a.is_exact()) return Value(Rational(-a.rational()));
  return Value(-a.to_double());
}

bool operator==(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = a.rational().compare(b.rational());
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Value abs(const Value& v) { return v.sign() < 0 ? -v : v; }

Value max(const Value& a, const Value& b) { return (b > a) ? b : a; }

Value same_mode(double v, bool exact) {
  if (exact) return Value(Rational(v));
  return Value(v);
}

bool geq_tol(const Value& lhs, const Value& rhs, double rel) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs >= rhs;
  const double a = lhs.to_double();
  const double b = rhs.to_double();
  if (a >= b) return true;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return a >= b - rel * scale;
}

std::string format_sig(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace incmax
