#include "fdtc/rational.hpp"

#include <stdexcept>

namespace fdtc {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(q);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

RationalInterval RationalInterval::closed(Rational lo, Rational hi) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
  return RationalInterval{std::move(lo), std::move(hi), true, true};
}

bool RationalInterval::contains(const Rational& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string RationalInterval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

FareySearch bounded_denominator_rationals(const RationalInterval& interval, long max_den) {
  if (max_den < 1) throw std::invalid_argument("denominator bound must be >= 1");
  FareySearch out;
  const mpz_class n = max_den;

  // Consecutive Farey neighbours a/b < c/d, starting at floor(lo)/1 and its
  // right neighbour (floor(lo)*n + 1)/n.
  mpz_class a = interval.lo.floor(), b = 1;
  mpz_class c = a * n + 1, d = n;
  auto emit = [&](const mpz_class& p, const mpz_class& q) -> bool {
    Rational r(p, q);
    if (interval.hi < r || (!interval.hi_closed && r == interval.hi)) return false;
    if (interval.contains(r)) out.candidates.push_back(r);
    return true;
  };
  if (!emit(a, b)) return out;
  while (true) {
    if (!emit(c, d)) break;
    const mpz_class k = (n + b) / d;
    mpz_class e = k * c - a, f = k * d - b;
    a = c; b = d; c = e; d = f;
  }
  return out;
}

}  // namespace fdtc
