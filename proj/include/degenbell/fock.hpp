#pragma once

#include <vector>

#include "degenbell/boson.hpp"
#include "degenbell/numeric.hpp"
#include "degenbell/rational.hpp"

namespace degenbell {

// State in the number basis truncated to dimension `dim`: amps[m] is the
// amplitude on |m>.
struct FockVector {
  explicit FockVector(unsigned dim);
  static FockVector basis(unsigned m, unsigned dim);

  unsigned dim() const { return static_cast<unsigned>(amps.size()); }
  Real norm_sq() const;

  std::vector<Complex> amps;
};

// Truncated coherent state: amps[m] = e^{-|z|^2/2} z^m / sqrt(m!).
// `captured` is the Poisson mass sum_{m<dim} e^{-s} s^m / m! kept by the
// truncation (s = |z|^2); 1 - captured is the dropped norm-squared.
struct CoherentState {
  FockVector vec;
  Real captured;

  Real deficit() const { return captured < 1 ? 1 - captured : Real(0); }
};

CoherentState coherent(const Complex& z, unsigned dim);

// <x|y> with the physics convention (conjugate-linear in x).
Complex overlap(const FockVector& x, const FockVector& y);

// Matrix action of sum c_ij (a†)^i a^j; components pushed past dim - 1 are
// dropped (the expectation bound accounts for them). Throws if a single
// monomial already cannot fit, i.e. some creation power >= dim.
FockVector apply_normal_form(const NormalForm& nf, const FockVector& v);

// Eigenvalue of a diagonal normal form on |m>: sum_j c_jj m!/(m-j)!.
Rational exact_eigenvalue(const NormalForm& nf, unsigned m);

struct ExpectationResult {
  Complex value;
  Real truncation_bound;  // |value - untruncated expectation| is below this
  unsigned dim = 0;
};

// <z| nf |z> on the truncated space, with a rigorous bound on the error
// against the untruncated coherent-state expectation.
ExpectationResult expectation(const Complex& z, const NormalForm& nf, unsigned dim);

struct GenfunResult {
  Real truncated;    // sum over kept basis states
  Real closed_form;  // beta^r e^{s (beta - 1)}, beta = (1 + lambda t)^{1/lambda}
  Real bound;        // bound on the dropped part of the sum
  unsigned dim = 0;
};

// Coherent-state expectation of the operator (1 + lambda t)^{(N + r)/lambda}
// (e^{t(N+r)} at lambda = 0), which acts diagonally with eigenvalue
// beta^{m+r} on |m>, against its closed form. Requires 1 + lambda t > 0.
GenfunResult genfun_eval(const Complex& z, unsigned r, const Rational& lambda, const Real& t,
                         unsigned dim);

// Three routes to the same number: the Poisson-weighted eigenvalue series,
// the simulated coherent expectation of (N + r)_{k,lambda}, and the exact
// polynomial evaluated at |z|^2. `bound` covers every pairwise difference
// attributable to truncation.
struct FockDobinski {
  Real series;
  Real expect;
  Real poly;
  Real bound;
  unsigned dim = 0;

  Real max_diff() const;
};

FockDobinski dobinski_fock_check(const Complex& z, unsigned k, unsigned r, const Rational& lambda,
                                 unsigned dim);

}  // namespace degenbell
