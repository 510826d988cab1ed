#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fdtc/fdtc.hpp"
#include "support.hpp"

using namespace fdtc;

namespace {

// Reduced p/q with q <= D in the interval, by scanning every denominator.
std::vector<Rational> brute_force(const RationalInterval& iv, long D) {
  std::vector<Rational> out;
  for (long q = 1; q <= D; ++q) {
    const mpz_class lo = (iv.lo * Rational(q)).floor() - 1, hi = (iv.hi * Rational(q)).ceil() + 1;
    for (mpz_class p = lo; p <= hi; ++p) {
      const Rational r(p, q);
      if (r.denominator() == q && iv.contains(r)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical form and arithmetic") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 6) * Rational(6) == Rational(1));
  CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-3).floor() == -3);
  CHECK(Rational(-3).ceil() == -3);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("5/31") == Rational(5, 31));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("interval membership respects open ends") {
  RationalInterval iv{Rational(0), Rational(1), false, true};
  CHECK_FALSE(iv.contains(Rational(0)));
  CHECK(iv.contains(Rational(1)));
  CHECK(iv.width() == Rational(1));
  CHECK(RationalInterval::point(Rational(1, 3)).is_point());
}

TEST_CASE("bounded-denominator examples") {
  auto r = unique_bounded_denominator(RationalInterval::closed(Rational(15, 100), Rational(17, 100)), 6);
  REQUIRE(r.status == DenominatorSearch::Status::Unique);
  CHECK(r.candidates.front() == Rational(1, 6));
  r = unique_bounded_denominator(RationalInterval::closed(Rational(5, 31), Rational(6, 31)), 6);
  REQUIRE(r.status == DenominatorSearch::Status::Unique);
  CHECK(r.candidates.front() == Rational(1, 6));
  r = unique_bounded_denominator(RationalInterval::closed(Rational(0), Rational(1)), 2);
  CHECK(r.status == DenominatorSearch::Status::Ambiguous);
  CHECK(r.candidates == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
  r = unique_bounded_denominator(RationalInterval::closed(Rational(1, 7), Rational(1, 7)), 6);
  CHECK(r.status == DenominatorSearch::Status::Empty);
  CHECK(r.message() == "no admissible rational");
}

TEST_CASE("Farey walk agrees with brute force") {
  std::mt19937 rng(testing::seed_from_env(11));
  for (int t = 0; t < 300; ++t) {
    const long D = 1 + static_cast<long>(rng() % 12);
    const long den = 1 + static_cast<long>(rng() % 60);
    long a = static_cast<long>(rng() % 241) - 120, b = static_cast<long>(rng() % 241) - 120;
    if (a > b) std::swap(a, b);
    RationalInterval iv{Rational(a, den), Rational(b, den), rng() % 2 == 0, rng() % 2 == 0};
    if (iv.lo == iv.hi) iv.lo_closed = iv.hi_closed = true;
    CHECK(bounded_denominator_rationals(iv, D).candidates == brute_force(iv, D));
  }
}
