#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "degenbell/rational.hpp"

namespace degenbell {

// binary128 throughout the numeric lane: the verification tolerances are
// absolute (~1e-9) while checked values reach ~3e8, which is finer than one
// double ulp at that magnitude. Quad precision keeps rounding near 1e-24.
using Real = boost::multiprecision::cpp_bin_float_quad;
using Complex = boost::multiprecision::cpp_complex_quad;

inline Real to_real(const Rational& q) { return q.raw().convert_to<Real>(); }
inline Real to_real(const BigInt& n) { return n.convert_to<Real>(); }

// Exact: every finite binary float is a dyadic rational.
inline Rational to_rational_exact(const Real& x) {
  const detail::BoostRational raw(x);
  return Rational(BigInt(boost::multiprecision::numerator(raw)),
                  BigInt(boost::multiprecision::denominator(raw)));
}

// Upper bound on the Poisson tail e^{-s} sum_{u >= m_min} s^u / u!, clamped
// to 1 (the whole mass). Geometric: for m_min + 1 > s the terms shrink by at
// least s / (m_min + 1) each step.
inline Real poisson_tail_bound(unsigned m_min, const Real& s) {
  if (s <= 0) return m_min == 0 ? Real(1) : Real(0);
  if (Real(m_min) + 1 <= s) return Real(1);
  Real head = exp(-s);
  for (unsigned u = 1; u <= m_min; ++u) head *= s / u;
  const Real bound = head * (Real(m_min) + 1) / (Real(m_min) + 1 - s);
  return bound < 1 ? bound : Real(1);
}

}  // namespace degenbell
