#include "degenbell/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenbell/boson.hpp"
#include "degenbell/fock.hpp"
#include "degenbell/numeric.hpp"
#include "degenbell/power_series.hpp"
#include "degenbell/stirling_bell.hpp"

namespace degenbell {

namespace {

constexpr unsigned kOrder = 12;     // series truncation and deepest table row
constexpr unsigned kPointMax = 20;  // largest integer evaluation point
constexpr unsigned kDim = 64;       // Fock truncation for coherent-state checks

const std::vector<unsigned>& grid_r() {
  static const std::vector<unsigned> v{0, 1, 2, 3};
  return v;
}

const std::vector<Rational>& grid_lambda() {
  static const std::vector<Rational> v{Rational(0),     Rational(1), Rational(-1),
                                       Rational(1, 2),  Rational(-1, 3), Rational(2)};
  return v;
}

const std::vector<Rational>& grid_x() {
  static const std::vector<Rational> v{Rational(0), Rational(1), Rational(1, 2), Rational(3)};
  return v;
}

const std::vector<Rational>& grid_x_positive() {
  static const std::vector<Rational> v{Rational(1), Rational(1, 2), Rational(3)};
  return v;
}

// |z| <= 2 keeps every Poisson tail at dim 64 far below the tolerances;
// all components are dyadic so |z|^2 converts exactly back to a Rational.
const std::vector<Complex>& grid_z() {
  static const std::vector<Complex> v{
      Complex(Real(1) / 2, Real(0)), Complex(Real(1), Real(0)),
      Complex(Real(2), Real(0)),     Complex(Real(0), Real(1)),
      Complex(Real(1) / 2, Real(1) / 2)};
  return v;
}

// Pinned pass thresholds for the numeric suites.
const Real& dobinski_tol() {
  static const Real v("1e-12");
  return v;
}
const Real& dobinski_match_tol() {
  static const Real v("1e-10");
  return v;
}
const Real& fock_tol() {
  static const Real v("1e-9");
  return v;
}
// Comparisons expected exact up to binary128 rounding.
const Real& rounding_tol() {
  static const Real v("1e-25");
  return v;
}

std::string point_key(unsigned r, const Rational& lambda) {
  return "r=" + std::to_string(r) + " lambda=" + lambda.str();
}

std::string rstr(const Real& x) { return x.str(12); }

std::string zstr(const Complex& z) {
  return "(" + z.real().str(6) + "," + z.imag().str(6) + ")";
}

void append(CheckReport& into, const CheckReport& from) {
  for (const CheckCase& c : from.cases()) into.add(c.key, c.pass, c.detail);
}

CheckReport suite_stirling_oracle(unsigned) {
  CheckReport report("stirling-oracle");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda()) {
      const StirlingTable table(kOrder, r, lambda);
      for (unsigned n = 0; n <= kOrder; ++n) {
        const std::vector<Rational> expected = stirling_oracle(n, r, lambda);
        const bool same = expected == table.row(n);
        std::string detail;
        if (!same)
          for (unsigned k = 0; k <= n; ++k)
            if (expected[k] != table.entry(n, k)) {
              detail = "k=" + std::to_string(k) + " oracle=" + expected[k].str() +
                       " table=" + table.entry(n, k).str();
              break;
            }
        report.add(point_key(r, lambda) + " n=" + std::to_string(n), same, detail);
      }
    }
  return report;
}

CheckReport suite_integer_point(unsigned) {
  CheckReport report("integer-point");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      append(report, integer_point_check(kOrder, r, lambda, kPointMax));
  return report;
}

CheckReport suite_egf(unsigned) {
  CheckReport report("egf");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda()) append(report, egf_check(kOrder, r, lambda));
  return report;
}

CheckReport suite_normal_ordering(unsigned) {
  CheckReport report("normal-ordering");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda()) {
      const StirlingTable table(8, r, lambda);
      for (unsigned n = 0; n <= 8; ++n) {
        // (N + r)_{n,lambda} = sum_k entry(n,k) (a†)^k a^k
        NormalForm expected_diag;
        for (unsigned k = 0; k <= n; ++k)
          expected_diag.add_term(k, k, table.entry(n, k));
        const NormalForm diag = deg_number_power(n, r, lambda);
        report.add(point_key(r, lambda) + " diagonal n=" + std::to_string(n),
                   diag == expected_diag && diag.is_diagonal(),
                   diag == expected_diag ? "" : "got=" + diag.str() + " want=" + expected_diag.str());
        // (N)_{n,lambda} (a†)^r = sum_k entry(n,k) (a†)^{k+r} a^k
        NormalForm expected_weighted;
        for (unsigned k = 0; k <= n; ++k)
          expected_weighted.add_term(k + r, k, table.entry(n, k));
        const NormalForm weighted = creation_weighted_power(n, r, lambda);
        report.add(point_key(r, lambda) + " weighted n=" + std::to_string(n),
                   weighted == expected_weighted,
                   weighted == expected_weighted
                       ? ""
                       : "got=" + weighted.str() + " want=" + expected_weighted.str());
      }
    }
  return report;
}

CheckReport suite_confluence(unsigned seed) {
  CheckReport report("confluence");
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < 200; ++i) {
    const unsigned len = 1 + static_cast<unsigned>(rng() % 8);
    std::vector<BosonOp> word(len);
    std::string text;
    for (BosonOp& op : word) {
      op = rng() % 2 == 0 ? BosonOp::Annihilate : BosonOp::Create;
      text += op == BosonOp::Annihilate ? "a " : "ad ";
    }
    text.pop_back();
    const NormalForm closed = normal_order_word(word);
    const NormalForm naive = normal_order_word_naive(word);
    report.add("i=" + std::to_string(i) + " word=" + text, closed == naive,
               closed == naive ? std::string()
                               : "closed=" + closed.str() + " naive=" + naive.str());
  }
  return report;
}

CheckReport suite_genfun_series(unsigned) {
  CheckReport report("genfun-series");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      append(report, genfun_check(kOrder, r, lambda, grid_x()));
  return report;
}

CheckReport suite_genfun_ode(unsigned) {
  CheckReport report("genfun-ode");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (const Rational& x : grid_x()) {
        const PowerSeries residual = ode_residual(kOrder, r, lambda, x);
        report.add(point_key(r, lambda) + " x=" + x.str(), residual.is_zero(),
                   residual.is_zero() ? std::string() : "residual=" + residual.str());
      }
  return report;
}

CheckReport suite_bell_recurrence(unsigned) {
  CheckReport report("bell-recurrence");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      append(report, recurrence_check(kOrder, r, lambda, grid_x()));
  return report;
}

CheckReport suite_dobinski(unsigned) {
  CheckReport report("dobinski");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (const Rational& x : grid_x_positive())
        for (unsigned k = 0; k <= 8; ++k) {
          const DobinskiResult res = dobinski(k, r, lambda, x, dobinski_tol());
          const Real exact = to_real(bell_eval(k, r, lambda, x));
          const Real diff = abs(res.value - exact);
          const bool pass = res.bound < dobinski_tol() && diff < dobinski_match_tol();
          report.add(point_key(r, lambda) + " x=" + x.str() + " k=" + std::to_string(k), pass,
                     pass ? std::string()
                          : "series=" + rstr(res.value) + " exact=" + rstr(exact) +
                                " diff=" + rstr(diff) + " bound=" + rstr(res.bound));
        }
  return report;
}

CheckReport suite_fock_dobinski(unsigned) {
  CheckReport report("fock-dobinski");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (const Complex& z : grid_z())
        for (unsigned k = 0; k <= 8; ++k) {
          const FockDobinski res = dobinski_fock_check(z, k, r, lambda, kDim);
          const bool pass = res.bound < fock_tol() && res.max_diff() < fock_tol();
          report.add(point_key(r, lambda) + " z=" + zstr(z) + " k=" + std::to_string(k), pass,
                     pass ? std::string()
                          : "series=" + rstr(res.series) + " expect=" + rstr(res.expect) +
                                " poly=" + rstr(res.poly) + " bound=" + rstr(res.bound));
        }
  return report;
}

CheckReport suite_coherent_expectation(unsigned) {
  CheckReport report("coherent-expectation");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (const Complex& z : grid_z())
        for (unsigned n = 0; n <= 8; ++n) {
          const ExpectationResult res = expectation(z, deg_number_power(n, r, lambda), kDim);
          const Rational s = to_rational_exact(norm(z));
          const Real exact = to_real(bell_eval(n, r, lambda, s));
          const Real diff = abs(res.value.real() - exact);
          const Real imag_mag = abs(res.value.imag());
          const bool pass = diff < fock_tol() && imag_mag < rounding_tol() &&
                            res.truncation_bound < fock_tol();
          report.add(point_key(r, lambda) + " z=" + zstr(z) + " n=" + std::to_string(n), pass,
                     pass ? std::string()
                          : "sim=" + rstr(res.value.real()) + " exact=" + rstr(exact) +
                                " diff=" + rstr(diff) + " bound=" + rstr(res.truncation_bound));
        }
  return report;
}

CheckReport suite_classical_bell(unsigned) {
  CheckReport report("classical-bell");
  static const long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (unsigned n = 0; n <= 6; ++n) {
    const Rational value = bell_eval(n, 0, Rational(0), Rational(1));
    report.add("bell n=" + std::to_string(n), value == Rational(bell[n]),
               "got=" + value.str() + " want=" + std::to_string(bell[n]));
  }
  // classical second-kind values at lambda = 0, r = 0
  struct Known {
    unsigned n, k;
    long value;
  };
  static const Known knowns[] = {{4, 2, 7}, {5, 2, 15}, {5, 3, 25}, {6, 3, 90}, {6, 4, 65}};
  const StirlingTable table(6, 0, Rational(0));
  for (const Known& kn : knowns)
    report.add("stirling n=" + std::to_string(kn.n) + " k=" + std::to_string(kn.k),
               table.entry(kn.n, kn.k) == Rational(kn.value),
               "got=" + table.entry(kn.n, kn.k).str() + " want=" + std::to_string(kn.value));
  return report;
}

CheckReport suite_coherent_overlap(unsigned) {
  CheckReport report("coherent-overlap");
  for (const Complex& z1 : grid_z())
    for (const Complex& z2 : grid_z()) {
      const CoherentState c1 = coherent(z1, kDim);
      const CoherentState c2 = coherent(z2, kDim);
      const Complex trunc = overlap(c1.vec, c2.vec);
      const Complex exact = exp(-Complex(norm(z1) / 2) - Complex(norm(z2) / 2) + conj(z1) * z2);
      const Real bound = sqrt(c1.deficit() * c2.deficit());
      const Real diff = abs(trunc - exact);
      const bool pass = diff <= bound + rounding_tol() && bound < fock_tol();
      report.add("z1=" + zstr(z1) + " z2=" + zstr(z2), pass,
                 pass ? std::string()
                      : "trunc=" + rstr(trunc.real()) + "+" + rstr(trunc.imag()) +
                            "i diff=" + rstr(diff) + " bound=" + rstr(bound));
    }
  return report;
}

CheckReport suite_commutation_chain(unsigned) {
  CheckReport report("commutation-chain");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (unsigned k = 0; k <= 6; ++k)
        report.add(point_key(r, lambda) + " k=" + std::to_string(k),
                   commutation_chain_check(k, r, lambda));
  return report;
}

CheckReport suite_diff_operator(unsigned) {
  CheckReport report("diff-operator");
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (unsigned n = 0; n <= 8; ++n) {
        const NormalForm nf = deg_number_power(n, r, lambda);
        for (unsigned m = 0; m <= 10; ++m) {
          std::vector<Rational> mono(m + 1);
          mono[m] = Rational(1);
          const std::vector<Rational> image = apply_as_diff_operator(nf, mono);
          const Rational eig = deg_falling(Rational(m) + Rational(r), n, lambda);
          std::vector<Rational> expected;
          if (!eig.is_zero()) {
            expected.resize(m + 1);
            expected[m] = eig;
          }
          report.add(
              point_key(r, lambda) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
              image == expected, image == expected ? std::string() : "eigenvalue=" + eig.str());
        }
      }
  return report;
}

CheckReport suite_series_algebra(unsigned) {
  CheckReport report("series-algebra");
  for (const Rational& lambda : grid_lambda()) {
    for (const Rational& x : grid_x())
      for (const Rational& y : grid_x()) {
        const bool same =
            deg_exp(x + y, lambda, kOrder) == deg_exp(x, lambda, kOrder) * deg_exp(y, lambda, kOrder);
        report.add("additive lambda=" + lambda.str() + " x=" + x.str() + " y=" + y.str(), same);
      }
    for (const Rational& x : grid_x()) {
      const bool shift =
          (deg_exp(x, lambda, kOrder).derivative() - x * deg_exp(x - lambda, lambda, kOrder))
              .is_zero();
      report.add("derivative lambda=" + lambda.str() + " x=" + x.str(), shift);
      const PowerSeries g = x * (deg_exp(Rational(1), lambda, kOrder) - Rational(1));
      const bool inverse =
          (series_exp(g) * series_exp(Rational(-1) * g) - Rational(1)).is_zero();
      report.add("exp-inverse lambda=" + lambda.str() + " x=" + x.str(), inverse);
    }
  }
  for (const Rational& x : grid_x()) {
    const bool classical =
        series_exp(x * PowerSeries::variable(kOrder)) == deg_exp(x, Rational(0), kOrder);
    report.add("classical-limit x=" + x.str(), classical);
  }
  for (unsigned n = 1; n <= 20; ++n) {
    bool pascal = true;
    for (unsigned k = 0; k <= n; ++k)
      pascal = pascal && binomial(n, k) == binomial(n - 1, static_cast<long long>(k) - 1) +
                                               binomial(n - 1, k);
    report.add("pascal n=" + std::to_string(n), pascal);
  }
  for (const Rational& lambda : grid_lambda())
    for (const Rational& x : grid_x()) {
      bool split = true;
      for (unsigned m = 0; m <= 5 && split; ++m)
        for (unsigned n = 0; n <= 5 && split; ++n)
          split = deg_falling(x, m + n, lambda) ==
                  deg_falling(x, m, lambda) *
                      deg_falling(x - Rational(m) * lambda, n, lambda);
      report.add("falling-split lambda=" + lambda.str() + " x=" + x.str(), split);
    }
  return report;
}

CheckReport suite_fock_basis(unsigned) {
  CheckReport report("fock-basis");
  constexpr unsigned dim = 16;
  auto max_amp_diff = [](const FockVector& a, const FockVector& b) {
    Real out = 0;
    for (unsigned m = 0; m < a.dim(); ++m) out = std::max(out, abs(a.amps[m] - b.amps[m]));
    return out;
  };
  for (unsigned m = 0; m < dim; ++m) {
    const FockVector state = FockVector::basis(m, dim);
    // a† |m> = sqrt(m+1) |m+1>, falling off the edge at the truncation
    FockVector up_expected(dim);
    if (m + 1 < dim) up_expected.amps[m + 1] = Complex(sqrt(Real(m + 1)));
    const Real up_diff = max_amp_diff(apply_normal_form(NormalForm::monomial(1, 0), state),
                                      up_expected);
    report.add("raise m=" + std::to_string(m), up_diff < rounding_tol(),
               "diff=" + rstr(up_diff));
    // a |m> = sqrt(m) |m-1>
    FockVector down_expected(dim);
    if (m > 0) down_expected.amps[m - 1] = Complex(sqrt(Real(m)));
    const Real down_diff = max_amp_diff(apply_normal_form(NormalForm::monomial(0, 1), state),
                                        down_expected);
    report.add("lower m=" + std::to_string(m), down_diff < rounding_tol(),
               "diff=" + rstr(down_diff));
  }
  for (unsigned r : grid_r())
    for (const Rational& lambda : grid_lambda())
      for (unsigned n = 0; n <= 6; ++n)
        for (unsigned m = 0; m <= 12; ++m) {
          const Rational eig = exact_eigenvalue(deg_number_power(n, r, lambda), m);
          const Rational direct = deg_falling(Rational(m) + Rational(r), n, lambda);
          report.add(point_key(r, lambda) + " eigen n=" + std::to_string(n) +
                         " m=" + std::to_string(m),
                     eig == direct, eig == direct ? std::string()
                                                  : "operator=" + eig.str() +
                                                        " direct=" + direct.str());
        }
  {
    const CoherentState x = coherent(Complex(Real(1), Real(0)), kDim);
    const CoherentState y = coherent(Complex(Real(1) / 2, Real(1) / 2), kDim);
    const NormalForm op = NormalForm::monomial(2, 1);
    const NormalForm adj = NormalForm::monomial(1, 2);
    const Complex lhs = overlap(x.vec, apply_normal_form(op, y.vec));
    const Complex rhs = overlap(apply_normal_form(adj, x.vec), y.vec);
    report.add("adjoint (ad)^2 a", abs(lhs - rhs) < rounding_tol(),
               "lhs-rhs=" + rstr(abs(lhs - rhs)));
  }
  {
    const Complex z(Real(2), Real(0));
    const Real s = norm(z);
    Real prev_captured = 0;
    Real prev_tail = 2;
    bool monotone = true;
    bool tail_covers = true;
    for (unsigned d : {4u, 8u, 16u, 32u, 64u}) {
      const CoherentState c = coherent(z, d);
      const Real tail = poisson_tail_bound(d, s);
      monotone = monotone && c.captured >= prev_captured && tail <= prev_tail;
      tail_covers = tail_covers && c.deficit() <= tail + rounding_tol();
      prev_captured = c.captured;
      prev_tail = tail;
    }
    report.add("captured-mass monotone", monotone);
    report.add("deficit within tail bound", tail_covers);
  }
  return report;
}

using SuiteFn = CheckReport (*)(unsigned);

struct Suite {
  const char* name;
  SuiteFn fn;
};

constexpr Suite kSuites[] = {
    {"stirling-oracle", suite_stirling_oracle},
    {"integer-point", suite_integer_point},
    {"egf", suite_egf},
    {"normal-ordering", suite_normal_ordering},
    {"confluence", suite_confluence},
    {"genfun-series", suite_genfun_series},
    {"genfun-ode", suite_genfun_ode},
    {"bell-recurrence", suite_bell_recurrence},
    {"dobinski", suite_dobinski},
    {"fock-dobinski", suite_fock_dobinski},
    {"coherent-expectation", suite_coherent_expectation},
    {"classical-bell", suite_classical_bell},
    {"coherent-overlap", suite_coherent_overlap},
    {"commutation-chain", suite_commutation_chain},
    {"diff-operator", suite_diff_operator},
    {"series-algebra", suite_series_algebra},
    {"fock-basis", suite_fock_basis},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const Suite& s : kSuites) out.emplace_back(s.name);
  return out;
}

bool is_suite_name(const std::string& name) {
  return std::any_of(std::begin(kSuites), std::end(kSuites),
                     [&](const Suite& s) { return name == s.name; });
}

std::string grid_description() {
  auto join_r = [] {
    std::string out;
    for (unsigned r : grid_r()) out += (out.empty() ? "" : ", ") + std::to_string(r);
    return out;
  };
  auto join_q = [](const std::vector<Rational>& qs) {
    std::string out;
    for (const Rational& q : qs) out += (out.empty() ? "" : ", ") + q.str();
    return out;
  };
  std::string zs;
  for (const Complex& z : grid_z()) zs += (zs.empty() ? "" : ", ") + zstr(z);
  return "r in {" + join_r() + "}; lambda in {" + join_q(grid_lambda()) + "}; x in {" +
         join_q(grid_x()) + "}; z in {" + zs + "}; series order " + std::to_string(kOrder) +
         "; Fock dim " + std::to_string(kDim);
}

CheckReport run_suite(const std::string& name, unsigned seed) {
  for (const Suite& s : kSuites)
    if (name == s.name) return s.fn(seed);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<CheckReport> run_all_suites(unsigned seed) {
  std::vector<CheckReport> out;
  for (const Suite& s : kSuites) out.push_back(s.fn(seed));
  return out;
}

}  // namespace degenbell
