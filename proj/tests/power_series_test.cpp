#include "degenbell/power_series.hpp"

#include <stdexcept>

#include "doctest.h"

using degenbell::BigInt;
using degenbell::PowerSeries;
using degenbell::Rational;

namespace {
Rational frac(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }
}  // namespace

TEST_CASE("construction and coefficient access") {
  PowerSeries s(3);
  CHECK(s.order() == 3);
  CHECK(s.is_zero());
  s.set_coeff(2, Rational(5));
  CHECK(s.coeff(2) == Rational(5));
  CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
  CHECK_THROWS_AS(s.set_coeff(4, Rational(1)), std::out_of_range);
  CHECK_THROWS_AS(PowerSeries(2, {Rational(1), Rational(2)}), std::invalid_argument);
  CHECK(PowerSeries::variable(0).is_zero());
  CHECK(PowerSeries::variable(2).coeff(1) == Rational(1));
}

TEST_CASE("arithmetic truncates to the shorter operand") {
  const PowerSeries a = PowerSeries::constant(Rational(1), 3) + Rational(0);
  const PowerSeries b = PowerSeries::variable(5);
  CHECK((a + b).order() == 3);
  CHECK((a - b).order() == 3);
  CHECK((a * b).order() == 3);
  const PowerSeries one_plus_t =
      PowerSeries::constant(Rational(1), 2) + PowerSeries::variable(2);
  const PowerSeries sq = one_plus_t * one_plus_t;
  CHECK(sq.coeff(0) == Rational(1));
  CHECK(sq.coeff(1) == Rational(2));
  CHECK(sq.coeff(2) == Rational(1));
  CHECK(degenbell::pow(one_plus_t, 2) == sq);
  CHECK((Rational(3) * one_plus_t).coeff(1) == Rational(3));
  CHECK((one_plus_t - Rational(1)).coeff(0) == Rational(0));
  CHECK((-one_plus_t).coeff(0) == Rational(-1));
}

TEST_CASE("derivative shifts coefficients down") {
  PowerSeries s(2);
  s.set_coeff(0, Rational(1));
  s.set_coeff(1, Rational(2));
  s.set_coeff(2, Rational(3));
  const PowerSeries d = s.derivative();
  CHECK(d.order() == 1);
  CHECK(d.coeff(0) == Rational(2));
  CHECK(d.coeff(1) == Rational(6));
}

TEST_CASE("series_exp reproduces the exponential") {
  const PowerSeries e = degenbell::series_exp(PowerSeries::variable(5));
  CHECK(e.coeff(0) == Rational(1));
  CHECK(e.coeff(1) == Rational(1));
  CHECK(e.coeff(2) == frac(1, 2));
  CHECK(e.coeff(3) == frac(1, 6));
  CHECK(e.coeff(4) == frac(1, 24));
  CHECK(e.coeff(5) == frac(1, 120));
  CHECK_THROWS_AS(degenbell::series_exp(PowerSeries::constant(Rational(1), 3)),
                  std::invalid_argument);
  // exp(g) exp(-g) = 1
  PowerSeries g(6);
  g.set_coeff(1, frac(2, 3));
  g.set_coeff(3, Rational(-1));
  g.set_coeff(5, frac(1, 7));
  const PowerSeries prod =
      degenbell::series_exp(g) * degenbell::series_exp(Rational(-1) * g);
  CHECK((prod - Rational(1)).is_zero());
}

TEST_CASE("deg_exp coefficients are degenerate falling factorials over k!") {
  const PowerSeries classical = degenbell::deg_exp(Rational(2), Rational(0), 3);
  CHECK(classical.coeff(0) == Rational(1));
  CHECK(classical.coeff(1) == Rational(2));
  CHECK(classical.coeff(2) == Rational(2));
  CHECK(classical.coeff(3) == frac(4, 3));
  // x = lambda = 1 collapses to 1 + t
  const PowerSeries line = degenbell::deg_exp(Rational(1), Rational(1), 5);
  CHECK(line.coeff(0) == Rational(1));
  CHECK(line.coeff(1) == Rational(1));
  for (unsigned k = 2; k <= 5; ++k) CHECK(line.coeff(k) == Rational(0));
  // group law in the exponent
  const Rational l = frac(-1, 3);
  CHECK(degenbell::deg_exp(frac(7, 2), l, 8) ==
        degenbell::deg_exp(Rational(2), l, 8) * degenbell::deg_exp(frac(3, 2), l, 8));
  // matches series_exp at lambda = 0
  CHECK(degenbell::deg_exp(frac(5, 4), Rational(0), 8) ==
        degenbell::series_exp(frac(5, 4) * PowerSeries::variable(8)));
}

TEST_CASE("str prints every coefficient") {
  PowerSeries s(2);
  s.set_coeff(0, Rational(1));
  s.set_coeff(1, frac(-1, 2));
  CHECK(s.str() == "1 + -1/2*t + 0*t^2");
  CHECK(PowerSeries(0).str() == "0");
}
