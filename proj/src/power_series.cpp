#include "degenbell/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace degenbell {

PowerSeries::PowerSeries(unsigned order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("PowerSeries: coefficient count must be order + 1");
}

PowerSeries PowerSeries::constant(const Rational& value, unsigned order) {
  PowerSeries out(order);
  out.coeffs_[0] = value;
  return out;
}

PowerSeries PowerSeries::variable(unsigned order) {
  PowerSeries out(order);
  if (order >= 1) out.coeffs_[1] = Rational(1);
  return out;
}

const Rational& PowerSeries::coeff(unsigned k) const {
  if (k >= coeffs_.size()) throw std::out_of_range("PowerSeries: coefficient index past order");
  return coeffs_[k];
}

void PowerSeries::set_coeff(unsigned k, Rational value) {
  if (k >= coeffs_.size()) throw std::out_of_range("PowerSeries: coefficient index past order");
  coeffs_[k] = std::move(value);
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries out(order() - 1);
  for (unsigned k = 0; k < order(); ++k) out.coeffs_[k] = Rational(k + 1) * coeffs_[k + 1];
  return out;
}

std::string PowerSeries::str() const {
  std::string out = coeffs_[0].str();
  for (unsigned k = 1; k < coeffs_.size(); ++k) {
    out += " + ";
    out += coeffs_[k].str();
    out += "*t";
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (unsigned i = 0; i <= out.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= out.order(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
  PowerSeries out = s;
  for (Rational& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries operator+(const PowerSeries& s, const Rational& c) {
  PowerSeries out = s;
  out.coeffs_[0] += c;
  return out;
}

PowerSeries operator-(const PowerSeries& s, const Rational& c) {
  PowerSeries out = s;
  out.coeffs_[0] -= c;
  return out;
}

PowerSeries series_exp(const PowerSeries& g) {
  if (!g.coeff(0).is_zero())
    throw std::invalid_argument("series_exp: constant term must be zero");
  const unsigned n = g.order();
  PowerSeries f(n);
  f.set_coeff(0, Rational(1));
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc;
    for (unsigned k = 1; k <= m; ++k) acc += Rational(k) * g.coeff(k) * f.coeff(m - k);
    f.set_coeff(m, acc / Rational(m));
  }
  return f;
}

PowerSeries deg_exp(const Rational& x, const Rational& lambda, unsigned order) {
  PowerSeries out(order);
  Rational df = 1;  // (x)_{k,lambda}
  BigInt fct = 1;   // k!
  for (unsigned k = 0;; ++k) {
    out.set_coeff(k, df / Rational(fct));
    if (k == order) break;
    df *= x - Rational(k) * lambda;
    fct *= k + 1;
  }
  return out;
}

PowerSeries pow(const PowerSeries& base, unsigned exp) {
  PowerSeries acc = PowerSeries::constant(Rational(1), base.order());
  for (unsigned i = 0; i < exp; ++i) acc = acc * base;
  return acc;
}

}  // namespace degenbell
