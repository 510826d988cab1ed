#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fdtc {

/// Exact rational in canonical form (gcd(|num|, den) = 1, den > 0).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  static Rational parse(const std::string& text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const { return Rational(::abs(value_)); }
  mpz_class floor() const;
  mpz_class ceil() const;

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  mpq_class value_{0};
};

/// Interval with rational ends; lo == hi requires both ends closed.
struct RationalInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static RationalInterval closed(Rational lo, Rational hi);
  static RationalInterval point(Rational v) { return closed(v, v); }

  bool contains(const Rational& x) const;
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  std::string str() const;
};

/// Result of searching an interval for rationals with bounded denominator.
struct FareySearch {
  std::vector<Rational> candidates;  // increasing
  bool unique() const { return candidates.size() == 1; }
  bool empty() const { return candidates.empty(); }
};

/// All reduced p/q with 1 <= q <= max_den inside the interval, by walking the
/// Farey sequence of order max_den from the first term at or above the lower end.
FareySearch bounded_denominator_rationals(const RationalInterval& interval, long max_den);

}  // namespace fdtc
