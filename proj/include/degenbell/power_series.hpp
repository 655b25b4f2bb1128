#pragma once

#include <string>
#include <vector>

#include "degenbell/rational.hpp"

namespace degenbell {

// Truncated formal power series in one variable over Rational. The order
// (highest retained power) is fixed at construction. Binary operations
// truncate to the shorter operand, so results are always exact through
// their own order.
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  PowerSeries(unsigned order, std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& value, unsigned order);
  // The series t (truncates to zero at order 0).
  static PowerSeries variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Rational& coeff(unsigned k) const;
  void set_coeff(unsigned k, Rational value);

  bool is_zero() const;
  PowerSeries derivative() const;

  // "c0 + c1*t + ... + cN*t^N", every coefficient printed.
  std::string str() const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& s);
  friend PowerSeries operator+(const PowerSeries& s, const Rational& c);
  friend PowerSeries operator-(const PowerSeries& s, const Rational& c);

  // Same order and identical coefficients.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// exp of a series with zero constant term, by the first-order recurrence
// f' = g' f: n f_n = sum_{k=1..n} k g_k f_{n-k}.
PowerSeries series_exp(const PowerSeries& g);

// Degenerate exponential e_lambda^x(t) = (1 + lambda t)^(x/lambda), i.e.
// coefficients (x)_{k,lambda} / k!; the classical e^{x t} at lambda = 0.
PowerSeries deg_exp(const Rational& x, const Rational& lambda, unsigned order);

PowerSeries pow(const PowerSeries& base, unsigned exp);

}  // namespace degenbell
