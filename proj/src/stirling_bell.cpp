#include "degenbell/stirling_bell.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degenbell {

namespace {

std::string point_key(unsigned r, const Rational& lambda) {
  return "r=" + std::to_string(r) + " lambda=" + lambda.str();
}

}  // namespace

StirlingTable::StirlingTable(unsigned nmax, unsigned r, Rational lambda)
    : r_(r), lambda_(std::move(lambda)) {
  rows_.resize(static_cast<std::size_t>(nmax) + 1);
  rows_[0] = {Rational(1)};
  for (unsigned n = 0; n < nmax; ++n) {
    std::vector<Rational> next(n + 2);
    for (unsigned k = 0; k <= n + 1; ++k) {
      Rational v = k > 0 ? rows_[n][k - 1] : Rational(0);
      if (k <= n) v += (Rational(k) + Rational(r_) - Rational(n) * lambda_) * rows_[n][k];
      next[k] = std::move(v);
    }
    rows_[n + 1] = std::move(next);
  }
}

unsigned StirlingTable::nmax() const {
  if (rows_.empty()) throw std::logic_error("StirlingTable: empty table has no nmax");
  return static_cast<unsigned>(rows_.size()) - 1;
}

Rational StirlingTable::entry(long long n, long long k) const {
  if (n >= static_cast<long long>(rows_.size()))
    throw std::out_of_range("StirlingTable::entry: row past nmax");
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Rational>& StirlingTable::row(unsigned n) const {
  if (n >= rows_.size()) throw std::out_of_range("StirlingTable::row: row past nmax");
  return rows_[n];
}

std::string StirlingTable::to_csv() const {
  std::string out = "n,k,value\n";
  for (std::size_t n = 0; n < rows_.size(); ++n)
    for (std::size_t k = 0; k < rows_[n].size(); ++k) {
      out += std::to_string(n);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += rows_[n][k].str();
      out += '\n';
    }
  return out;
}

nlohmann::json StirlingTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t n = 0; n < rows_.size(); ++n)
    for (std::size_t k = 0; k < rows_[n].size(); ++k)
      entries.push_back({n, k, rows_[n][k].str()});
  nlohmann::json j;
  if (rows_.empty())
    j["nmax"] = nullptr;
  else
    j["nmax"] = rows_.size() - 1;
  j["r"] = r_;
  j["lambda"] = lambda_.str();
  j["entries"] = std::move(entries);
  return j;
}

namespace {

[[noreturn]] void csv_fail(const std::string& why) {
  throw std::invalid_argument("StirlingTable::from_csv: " + why);
}

unsigned parse_index(std::string_view field, const char* what) {
  if (field.empty()) csv_fail(std::string("empty ") + what + " field");
  unsigned long long value = 0;
  for (char ch : field) {
    if (ch < '0' || ch > '9') csv_fail(std::string("non-numeric ") + what + " field");
    value = value * 10 + static_cast<unsigned long long>(ch - '0');
    if (value > 1000000) csv_fail(std::string(what) + " out of range");
  }
  return static_cast<unsigned>(value);
}

}  // namespace

StirlingTable StirlingTable::from_csv(std::string_view text, unsigned r, const Rational& lambda) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // a trailing newline leaves one empty tail entry; anything else must be data
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != "n,k,value") csv_fail("missing \"n,k,value\" header");

  StirlingTable table;
  table.r_ = r;
  table.lambda_ = lambda;
  unsigned expect_n = 0;
  unsigned expect_k = 0;
  std::vector<Rational> current;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      csv_fail("expected exactly three comma-separated fields");
    const unsigned n = parse_index(line.substr(0, c1), "n");
    const unsigned k = parse_index(line.substr(c1 + 1, c2 - c1 - 1), "k");
    if (n != expect_n || k != expect_k)
      csv_fail("rows must appear in row-major triangular order");
    current.push_back(Rational::parse(line.substr(c2 + 1)));
    if (k == n) {
      table.rows_.push_back(std::move(current));
      current.clear();
      ++expect_n;
      expect_k = 0;
    } else {
      ++expect_k;
    }
  }
  if (!current.empty()) csv_fail("last row is incomplete");
  return table;
}

StirlingTable StirlingTable::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) -> void {
    throw std::invalid_argument("StirlingTable::from_json: " + why);
  };
  if (!j.is_object()) fail("expected an object");
  if (!j.contains("r") || !j["r"].is_number_unsigned()) fail("missing unsigned \"r\"");
  if (!j.contains("lambda") || !j["lambda"].is_string()) fail("missing string \"lambda\"");
  if (!j.contains("entries") || !j["entries"].is_array()) fail("missing array \"entries\"");

  StirlingTable table;
  table.r_ = j["r"].get<unsigned>();
  table.lambda_ = Rational::parse(j["lambda"].get<std::string>());
  unsigned expect_n = 0;
  unsigned expect_k = 0;
  std::vector<Rational> current;
  for (const nlohmann::json& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned() || !e[2].is_string())
      fail("entries must be [n, k, value] triples");
    const unsigned n = e[0].get<unsigned>();
    const unsigned k = e[1].get<unsigned>();
    if (n != expect_n || k != expect_k) fail("entries must be in row-major triangular order");
    current.push_back(Rational::parse(e[2].get<std::string>()));
    if (k == n) {
      table.rows_.push_back(std::move(current));
      current.clear();
      ++expect_n;
      expect_k = 0;
    } else {
      ++expect_k;
    }
  }
  if (!current.empty()) fail("last row is incomplete");
  if (j.contains("nmax") && !j["nmax"].is_null()) {
    if (!j["nmax"].is_number_unsigned()) fail("\"nmax\" must be unsigned or null");
    if (table.rows_.empty() || j["nmax"].get<unsigned>() != table.nmax())
      fail("\"nmax\" disagrees with the entry list");
  } else if (!table.rows_.empty()) {
    fail("non-empty entry list requires \"nmax\"");
  }
  return table;
}

std::vector<Rational> stirling_oracle(unsigned n, unsigned r, const Rational& lambda) {
  // monomial coefficients of prod_{i<n} (x + r - i lambda)
  std::vector<Rational> poly{Rational(1)};
  for (unsigned i = 0; i < n; ++i) {
    const Rational c = Rational(r) - Rational(i) * lambda;
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] += c * poly[j];
    }
    poly = std::move(next);
  }
  // monomial coefficients of the falling factorials (x)_k, k <= n
  std::vector<std::vector<Rational>> ff(n + 1);
  ff[0] = {Rational(1)};
  for (unsigned k = 1; k <= n; ++k) {
    const Rational c = Rational(0) - Rational(k - 1);
    std::vector<Rational> next(ff[k - 1].size() + 1);
    for (std::size_t j = 0; j < ff[k - 1].size(); ++j) {
      next[j + 1] += ff[k - 1][j];
      next[j] += c * ff[k - 1][j];
    }
    ff[k] = std::move(next);
  }
  // peel from the top degree down; (x)_k is monic of degree k
  std::vector<Rational> out(n + 1);
  for (unsigned k = n + 1; k-- > 0;) {
    const Rational c = poly[k];
    out[k] = c;
    for (std::size_t j = 0; j <= k; ++j) poly[j] -= c * ff[k][j];
  }
  for (const Rational& rem : poly)
    if (!rem.is_zero()) throw std::logic_error("stirling_oracle: nonzero basis residual");
  return out;
}

CheckReport egf_check(unsigned nmax, unsigned r, const Rational& lambda) {
  CheckReport report("egf");
  const StirlingTable table(nmax, r, lambda);
  const PowerSeries e = deg_exp(Rational(1), lambda, nmax);
  const PowerSeries er = deg_exp(Rational(r), lambda, nmax);
  const PowerSeries em1 = e - Rational(1);
  PowerSeries power = PowerSeries::constant(Rational(1), nmax);  // (e - 1)^k
  Rational kfact = 1;
  for (unsigned k = 0; k <= nmax; ++k) {
    const PowerSeries s = (Rational(1) / kfact) * (power * er);
    for (unsigned n = 0; n <= nmax; ++n) {
      const Rational lhs = Rational(factorial(n)) * s.coeff(n);
      const Rational rhs = table.entry(n, k);
      report.add(point_key(r, lambda) + " n=" + std::to_string(n) + " k=" + std::to_string(k),
                 lhs == rhs, "series=" + lhs.str() + " table=" + rhs.str());
    }
    power = power * em1;
    kfact *= Rational(k + 1);
  }
  return report;
}

CheckReport integer_point_check(unsigned nmax, unsigned r, const Rational& lambda, unsigned mmax) {
  CheckReport report("integer-point");
  const StirlingTable table(nmax, r, lambda);
  for (unsigned m = 0; m <= mmax; ++m)
    for (unsigned n = 0; n <= nmax; ++n) {
      const Rational lhs = deg_falling(Rational(m) + Rational(r), n, lambda);
      Rational rhs;
      for (unsigned k = 0; k <= n; ++k) rhs += table.entry(n, k) * falling(Rational(m), k);
      report.add(point_key(r, lambda) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                 lhs == rhs, "direct=" + lhs.str() + " expanded=" + rhs.str());
    }
  return report;
}

Rational BellPolynomial::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::string BellPolynomial::str() const {
  std::string out = coeffs.empty() ? std::string("0") : coeffs[0].str();
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    out += " + ";
    out += coeffs[k].str();
    out += "*x";
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

BellPolynomial bell_poly(unsigned n, unsigned r, const Rational& lambda) {
  const StirlingTable table(n, r, lambda);
  return BellPolynomial{n, r, lambda, table.row(n)};
}

Rational bell_eval(unsigned n, unsigned r, const Rational& lambda, const Rational& x) {
  return bell_poly(n, r, lambda).eval(x);
}

CheckReport recurrence_check(unsigned nmax, unsigned r, const Rational& lambda,
                             const std::vector<Rational>& xs) {
  CheckReport report("bell-recurrence");
  if (nmax == 0) return report;
  const StirlingTable table(nmax, r, lambda);
  // weights w_j = (1-lambda)_{j,lambda} and v_j = (-lambda)_{j,lambda}
  std::vector<Rational> w(nmax), v(nmax);
  for (unsigned j = 0; j < nmax; ++j) {
    w[j] = deg_falling(Rational(1) - lambda, j, lambda);
    v[j] = deg_falling(-lambda, j, lambda);
  }
  for (const Rational& x : xs) {
    std::vector<Rational> phi(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n)
      phi[n] = BellPolynomial{n, r, lambda, table.row(n)}.eval(x);
    for (unsigned n = 0; n + 1 <= nmax; ++n) {
      Rational rhs;
      for (unsigned j = 0; j <= n; ++j)
        rhs += Rational(binomial(n, j)) * (x * w[j] + Rational(r) * v[j]) * phi[n - j];
      report.add(point_key(r, lambda) + " x=" + x.str() + " n=" + std::to_string(n + 1),
                 phi[n + 1] == rhs, "direct=" + phi[n + 1].str() + " recurrence=" + rhs.str());
    }
  }
  return report;
}

CheckReport genfun_check(unsigned order, unsigned r, const Rational& lambda,
                         const std::vector<Rational>& xs) {
  CheckReport report("genfun-series");
  const StirlingTable table(order, r, lambda);
  const PowerSeries em1 = deg_exp(Rational(1), lambda, order) - Rational(1);
  const PowerSeries er = deg_exp(Rational(r), lambda, order);
  for (const Rational& x : xs) {
    const PowerSeries f = series_exp(x * em1) * er;
    for (unsigned n = 0; n <= order; ++n) {
      const Rational lhs = Rational(factorial(n)) * f.coeff(n);
      const Rational rhs = BellPolynomial{n, r, lambda, table.row(n)}.eval(x);
      report.add(point_key(r, lambda) + " x=" + x.str() + " n=" + std::to_string(n),
                 lhs == rhs, "series=" + lhs.str() + " polynomial=" + rhs.str());
    }
  }
  return report;
}

PowerSeries ode_residual(unsigned order, unsigned r, const Rational& lambda, const Rational& x) {
  if (order == 0) throw std::invalid_argument("ode_residual: order must be at least 1");
  const PowerSeries em1 = deg_exp(Rational(1), lambda, order) - Rational(1);
  const PowerSeries f = series_exp(x * em1) * deg_exp(Rational(r), lambda, order);
  const PowerSeries factor = x * deg_exp(Rational(1) - lambda, lambda, order) +
                             Rational(r) * deg_exp(-lambda, lambda, order);
  return f.derivative() - factor * f;
}

DobinskiResult dobinski(unsigned k, unsigned r, const Rational& lambda,
                        const Rational& x, const Real& tol) {
  if (!(x > Rational(0))) throw std::invalid_argument("dobinski: x must be positive");
  if (!(tol > 0)) throw std::invalid_argument("dobinski: tol must be positive");
  const Real xr = to_real(x);
  const Real lam = to_real(lambda);
  const Real alam = abs(lam);
  const Real c = Real(r) + Real(k) * alam;  // |(n+r)_{k,lambda}| <= (n + c)^k
  // first index from which the envelope x^n/n! (n+c)^k is provably geometric
  const Real nstar_real = ceil(2 * xr + Real(k) * (1 + alam) + Real(r));
  const unsigned nstar = static_cast<unsigned>(nstar_real.convert_to<unsigned long long>());
  Real sum = 0;
  Real pois = 1;  // x^n / n!
  for (unsigned n = 0;; ++n) {
    Real df = 1;  // (n + r)_{k,lambda}
    for (unsigned i = 0; i < k; ++i) df *= Real(n) + Real(r) - Real(i) * lam;
    sum += pois * df;
    const Real pois_next = pois * xr / (n + 1);
    if (n >= nstar) {
      // check the claimed ratio <= 1/2 instead of trusting the index bound;
      // the ratio is decreasing in n, so one check covers the whole tail
      const Real u_next = pois_next * pow(Real(n) + 1 + c, static_cast<int>(k));
      const Real ratio =
          (xr / (Real(n) + 2)) * pow((Real(n) + 2 + c) / (Real(n) + 1 + c), static_cast<int>(k));
      const Real bound = exp(-xr) * 2 * u_next;
      if (ratio <= Real(1) / 2 && bound < tol) return DobinskiResult{exp(-xr) * sum, bound, n};
    }
    pois = pois_next;
    if (n > 10000000) throw std::runtime_error("dobinski: no convergence");
  }
}

}  // namespace degenbell
