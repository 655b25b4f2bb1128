#include "degenbell/rational.hpp"

#include <sstream>
#include <stdexcept>

#include "doctest.h"

using degenbell::BigInt;
using degenbell::Rational;

TEST_CASE("rationals reduce and carry the sign on the numerator") {
  CHECK(Rational(BigInt(3), BigInt(6)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-3), BigInt(6)).str() == "-1/2");
  CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");
  CHECK(Rational(BigInt(4), BigInt(2)).str() == "2");
  CHECK(Rational(BigInt(-3), BigInt(6)).numerator() == -1);
  CHECK(Rational(BigInt(-3), BigInt(6)).denominator() == 2);
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(BigInt(1), BigInt(3));
  const Rational sixth(BigInt(1), BigInt(6));
  CHECK(third + sixth == Rational(BigInt(1), BigInt(2)));
  CHECK(third - third == Rational(0));
  CHECK(third * Rational(6) == Rational(2));
  CHECK(third / sixth == Rational(2));
  CHECK(-third == Rational(BigInt(-1), BigInt(3)));
  CHECK(third < Rational(1));
  CHECK(Rational(-2) < third);
  CHECK(degenbell::abs(Rational(-5)) == Rational(5));
  CHECK(degenbell::pow(Rational(BigInt(1), BigInt(2)), 3) == Rational(BigInt(1), BigInt(8)));
  CHECK_THROWS_AS(third / Rational(0), std::invalid_argument);
}

TEST_CASE("parse accepts p and p/q only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/6") == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK(Rational::parse("007") == Rational(7));
  // a parse/str round trip is the identity on canonical forms
  for (const char* text : {"0", "-1/2", "22/7", "-1000000000000000000000/3"})
    CHECK(Rational::parse(text).str() == text);
  for (const char* bad : {"", "-", "+3", "1/0", "1/-2", "3/", " 1", "1 ", "1.5", "a", "1 /2"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(BigInt(-5), BigInt(10));
  CHECK(os.str() == "-1/2");
}

TEST_CASE("degenerate falling factorial specializes correctly") {
  using degenbell::deg_falling;
  const Rational half(BigInt(1), BigInt(2));
  CHECK(deg_falling(Rational(3), 2, half) == Rational(BigInt(15), BigInt(2)));
  CHECK(deg_falling(Rational(BigInt(7), BigInt(3)), 0, Rational(5)) == Rational(1));
  CHECK(deg_falling(Rational(1), 3, Rational(0)) == Rational(1));  // x^n at lambda = 0
  CHECK(degenbell::falling(Rational(5), 3) == Rational(60));
  CHECK(degenbell::falling(Rational(2), 3) == Rational(0));
  // (x)_{m+n,l} = (x)_{m,l} (x - m l)_{n,l}
  const Rational x(BigInt(5), BigInt(3));
  const Rational l(BigInt(-1), BigInt(3));
  CHECK(deg_falling(x, 5, l) == deg_falling(x, 2, l) * deg_falling(x - Rational(2) * l, 3, l));
}

TEST_CASE("integer helpers") {
  using degenbell::binomial;
  using degenbell::factorial;
  using degenbell::falling_int;
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(falling_int(5, 2) == 20);
  CHECK(falling_int(5, 0) == 1);
  CHECK(falling_int(2, 3) == 0);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(4, 7) == 0);
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(binomial(n, k) ==
            binomial(n - 1, static_cast<long long>(k) - 1) + binomial(n - 1, k));
}
