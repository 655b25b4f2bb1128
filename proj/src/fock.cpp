#include "degenbell/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenbell/stirling_bell.hpp"

namespace degenbell {

FockVector::FockVector(unsigned dim) : amps(dim) {
  if (dim == 0) throw std::invalid_argument("FockVector: dim must be at least 1");
}

FockVector FockVector::basis(unsigned m, unsigned dim) {
  FockVector out(dim);
  if (m >= dim) throw std::invalid_argument("FockVector::basis: level past dim");
  out.amps[m] = Complex(1);
  return out;
}

Real FockVector::norm_sq() const {
  Real out = 0;
  for (const Complex& a : amps) out += norm(a);
  return out;
}

CoherentState coherent(const Complex& z, unsigned dim) {
  FockVector vec(dim);
  const Real s = norm(z);
  Complex amp = Complex(exp(-s / 2));
  Real pois = exp(-s);
  Real captured = 0;
  for (unsigned m = 0; m < dim; ++m) {
    vec.amps[m] = amp;
    captured += pois;
    amp *= z / sqrt(Real(m + 1));
    pois *= s / (m + 1);
  }
  return CoherentState{std::move(vec), captured};
}

Complex overlap(const FockVector& x, const FockVector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  Complex out = 0;
  for (unsigned m = 0; m < x.dim(); ++m) out += conj(x.amps[m]) * y.amps[m];
  return out;
}

FockVector apply_normal_form(const NormalForm& nf, const FockVector& v) {
  const unsigned dim = v.dim();
  if (!nf.is_zero() && nf.max_creation() >= dim)
    throw std::invalid_argument("apply_normal_form: creation power must be below dim");
  FockVector out(dim);
  for (const auto& [key, c] : nf.terms()) {
    const auto [i, j] = key;
    const Real cr = to_real(c);
    for (unsigned m = j; m < dim; ++m) {
      const unsigned target = m - j + i;
      if (target >= dim) continue;
      // (a†)^i a^j |m> = sqrt( m!/(m-j)! * target!/(m-j)! ) |target>
      const BigInt scale = falling_int(m, j) * falling_int(target, i);
      out.amps[target] += cr * sqrt(to_real(scale)) * v.amps[m];
    }
  }
  return out;
}

Rational exact_eigenvalue(const NormalForm& nf, unsigned m) {
  if (!nf.is_diagonal())
    throw std::invalid_argument("exact_eigenvalue: normal form must be diagonal");
  Rational out;
  for (const auto& [key, c] : nf.terms()) out += c * Rational(falling_int(m, key.second));
  return out;
}

ExpectationResult expectation(const Complex& z, const NormalForm& nf, unsigned dim) {
  if (dim == 0) throw std::invalid_argument("expectation: dim must be at least 1");
  if (!nf.is_zero() && nf.max_degree() >= dim)
    throw std::invalid_argument("expectation: dim must exceed the top monomial degree");
  const CoherentState state = coherent(z, dim);
  const Complex value = overlap(state.vec, apply_normal_form(nf, state.vec));
  // <z|(a†)^i a^j|z> = conj(z)^i z^j exactly, so each monomial's dropped
  // contribution is |c| |z|^{i+j} times the Poisson tail mass it touches
  const Real s = norm(z);
  const Real zmod = sqrt(s);
  Real bound = 0;
  for (const auto& [key, c] : nf.terms()) {
    const unsigned deg = key.first + key.second;
    const unsigned min_m = deg < dim ? dim - deg : 0;
    bound += to_real(abs(c)) * pow(zmod, static_cast<int>(deg)) * poisson_tail_bound(min_m, s);
  }
  return ExpectationResult{value, bound, dim};
}

GenfunResult genfun_eval(const Complex& z, unsigned r, const Rational& lambda, const Real& t,
                         unsigned dim) {
  if (dim == 0) throw std::invalid_argument("genfun_eval: dim must be at least 1");
  const Real lam = to_real(lambda);
  Real beta;  // (1 + lambda t)^{1/lambda}, continued as e^t at lambda = 0
  if (lambda.is_zero()) {
    beta = exp(t);
  } else {
    const Real base = 1 + lam * t;
    if (base <= 0) throw std::domain_error("genfun_eval: requires 1 + lambda t > 0");
    beta = exp(log(base) / lam);
  }
  const CoherentState state = coherent(z, dim);
  Real truncated = 0;
  Real beta_pow = pow(beta, static_cast<int>(r));
  for (unsigned m = 0; m < dim; ++m) {
    truncated += norm(state.vec.amps[m]) * beta_pow;
    beta_pow *= beta;
  }
  const Real s = norm(z);
  const Real closed_form = pow(beta, static_cast<int>(r)) * exp(s * (beta - 1));
  const Real bound = closed_form * poisson_tail_bound(dim, s * beta);
  return GenfunResult{truncated, closed_form, bound, dim};
}

Real FockDobinski::max_diff() const {
  const Real d1 = abs(series - expect);
  const Real d2 = abs(series - poly);
  const Real d3 = abs(expect - poly);
  return std::max({d1, d2, d3});
}

FockDobinski dobinski_fock_check(const Complex& z, unsigned k, unsigned r, const Rational& lambda,
                                 unsigned dim) {
  const NormalForm nf = deg_number_power(k, r, lambda);
  const ExpectationResult ex = expectation(z, nf, dim);

  const Real s = norm(z);
  const Real lam = to_real(lambda);
  Real series = 0;
  Real pois = exp(-s);
  for (unsigned m = 0; m < dim; ++m) {
    Real df = 1;  // (m + r)_{k,lambda}
    for (unsigned i = 0; i < k; ++i) df *= Real(m) + Real(r) - Real(i) * lam;
    series += pois * df;
    pois *= s / (m + 1);
  }
  // tail of the series route under the envelope e^{-s} s^m/m! (m + c)^k
  const Real c = Real(r) + Real(k) * abs(lam);
  Real series_bound;
  const Real u_d = pois * pow(Real(dim) + c, static_cast<int>(k));  // pois is now the m = dim term
  const Real ratio =
      (s / (Real(dim) + 1)) * pow((Real(dim) + 1 + c) / (Real(dim) + c), static_cast<int>(k));
  if (ratio <= Real(1) / 2)
    series_bound = 2 * u_d;
  else
    throw std::invalid_argument("dobinski_fock_check: dim too small for a convergent tail");

  const Real poly = to_real(bell_eval(k, r, lambda, to_rational_exact(s)));
  const Real bound = series_bound + ex.truncation_bound + abs(ex.value.imag());
  return FockDobinski{series, ex.value.real(), poly, bound, dim};
}

}  // namespace degenbell
