#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g3trr/rational.hpp"

using namespace g3trr;

TEST_CASE("rational construction normalizes to lowest terms") {
  Rational r(6, -8);
  CHECK(r.str() == "-3/4");
  CHECK(r.denominator() > 0);
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-12, 4).str() == "-3");
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK((-a).str() == "-1/3");
  CHECK(a + Rational(0) == a);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
}

TEST_CASE("parse and serialize round-trip") {
  CHECK(Rational::parse("-2329/1451520").str() == "-2329/1451520");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("normalization is idempotent and gcd-free on random values") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    long num = long(rng() % 20001) - 10000;
    long den = long(rng() % 9999) + 1;
    Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
    CHECK(r.denominator() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
            r.denominator().get_mpz_t());
    CHECK((r.is_zero() ? r.denominator() == 1 : g == 1));
  }
}

TEST_CASE("ordering is total and exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
}
