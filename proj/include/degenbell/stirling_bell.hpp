#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "degenbell/numeric.hpp"
#include "degenbell/power_series.hpp"
#include "degenbell/rational.hpp"
#include "degenbell/report.hpp"

namespace degenbell {

// Triangular table of connection coefficients: entry(n, k) is the
// coefficient of the falling factorial (x)_k in the expansion of
// (x + r)(x + r - lambda)...(x + r - (n-1) lambda). Built row by row from
// the recurrence entry(n+1, k) = entry(n, k-1) + (k + r - n lambda) entry(n, k).
class StirlingTable {
 public:
  StirlingTable() = default;  // empty table; serializes to a bare header
  StirlingTable(unsigned nmax, unsigned r, Rational lambda);

  bool empty() const { return rows_.empty(); }
  unsigned nmax() const;
  unsigned r() const { return r_; }
  const Rational& lambda() const { return lambda_; }

  // Zero for k outside [0, n] and for n < 0; asking past nmax throws.
  Rational entry(long long n, long long k) const;
  const std::vector<Rational>& row(unsigned n) const;

  // "n,k,value" rows in row-major order, skipping nothing.
  std::string to_csv() const;
  nlohmann::json to_json() const;
  // CSV carries no parameters, so the caller restates them.
  static StirlingTable from_csv(std::string_view text, unsigned r, const Rational& lambda);
  static StirlingTable from_json(const nlohmann::json& j);

  friend bool operator==(const StirlingTable& a, const StirlingTable& b) {
    return a.r_ == b.r_ && a.lambda_ == b.lambda_ && a.rows_ == b.rows_;
  }

 private:
  unsigned r_ = 0;
  Rational lambda_;
  std::vector<std::vector<Rational>> rows_;
};

// Independent route to row n: expand prod_{i<n} (x + r - i lambda) in the
// monomial basis, then peel off falling factorials from the top degree down.
std::vector<Rational> stirling_oracle(unsigned n, unsigned r, const Rational& lambda);

// Row-n coefficients against n! times the t^n coefficient of
// (1/k!) (e_lambda(t) - 1)^k e_lambda^r(t), for all 0 <= k <= n <= nmax.
CheckReport egf_check(unsigned nmax, unsigned r, const Rational& lambda);

// (m + r)_{n,lambda} = sum_k entry(n, k) (m)_k at integer points m.
CheckReport integer_point_check(unsigned nmax, unsigned r, const Rational& lambda, unsigned mmax);

// phi_n(x) = sum_k entry(n, k) x^k, coefficients in degree order.
struct BellPolynomial {
  unsigned n = 0;
  unsigned r = 0;
  Rational lambda;
  std::vector<Rational> coeffs;  // coeffs[k] multiplies x^k

  Rational eval(const Rational& x) const;
  std::string str() const;  // "c0 + c1*x + ... + cn*x^n"
};

BellPolynomial bell_poly(unsigned n, unsigned r, const Rational& lambda);
Rational bell_eval(unsigned n, unsigned r, const Rational& lambda, const Rational& x);

// phi_{n+1}(x) = sum_{j<=n} C(n,j) [x (1-lambda)_{j,lambda} + r (-lambda)_{j,lambda}] phi_{n-j}(x),
// checked by evaluation at each supplied x for every n + 1 <= nmax.
CheckReport recurrence_check(unsigned nmax, unsigned r, const Rational& lambda,
                             const std::vector<Rational>& xs);

// Coefficients of exp(x (e_lambda(t) - 1)) e_lambda^r(t) against the Bell
// values phi_n(x)/n! through the given order.
CheckReport genfun_check(unsigned order, unsigned r, const Rational& lambda,
                         const std::vector<Rational>& xs);

// Residual series f' - (x e_lambda^{1-lambda}(t) + r e_lambda^{-lambda}(t)) f
// where f is the generating function above; identically zero through
// order - 1 when the table is right.
PowerSeries ode_residual(unsigned order, unsigned r, const Rational& lambda, const Rational& x);

// Truncated exponential-series evaluation of phi_k at x > 0:
//   e^{-x} sum_{n >= 0} x^n (n + r)_{k,lambda} / n!
// summed until a rigorous geometric tail bound drops below tol.
struct DobinskiResult {
  Real value;
  Real bound;       // upper bound on the dropped tail (same sign-free scale)
  unsigned terms;   // last index summed
};

DobinskiResult dobinski(unsigned k, unsigned r, const Rational& lambda,
                        const Rational& x, const Real& tol);

}  // namespace degenbell
