#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace degenbell {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
using BoostRational = boost::multiprecision::cpp_rational;
}

// Exact rational number, the coefficient field for everything in this
// library. Always stored reduced with a positive denominator; arithmetic
// never rounds. Text form is "p/q" (or just "p"), sign on the numerator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(value) {}

  Rational(BigInt value) : value_(std::move(value)) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    // the backend insists on a positive denominator, so move the sign up front
    value_ = den < 0 ? detail::BoostRational(-num, -den) : detail::BoostRational(num, den);
  }

  // Accepts exactly "p" or "p/q" with optional leading '-' on p and q a
  // positive integer; anything else (whitespace, '+', empty parts) throws.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_negative() const { return value_ < 0; }
  bool is_integer() const { return denominator() == 1; }

  std::string str() const;

  Rational operator-() const {
    Rational out = *this;
    out.value_ = -out.value_;
    return out;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

  const detail::BoostRational& raw() const { return value_; }

 private:
  detail::BoostRational value_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) -> void {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\": " + why);
  };
  auto scan_digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    return end;
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t num_end = scan_digits(pos);
  if (num_end == pos) fail("expected digits");
  BigInt num{std::string(text.substr(pos, num_end - pos))};
  BigInt den = 1;
  pos = num_end;
  if (pos < text.size()) {
    if (text[pos] != '/') fail("unexpected character");
    ++pos;
    std::size_t den_end = scan_digits(pos);
    if (den_end == pos) fail("expected digits after '/'");
    if (den_end != text.size()) fail("trailing characters after denominator");
    den = BigInt{std::string(text.substr(pos, den_end - pos))};
    if (den == 0) fail("zero denominator");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

inline std::string Rational::str() const {
  std::string out = numerator().str();
  if (const BigInt den = denominator(); den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

inline Rational abs(const Rational& q) { return q.is_negative() ? -q : q; }

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

// Degenerate falling factorial (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda);
// the empty product 1 for n = 0. At lambda = 0 this is x^n, at lambda = 1 the
// ordinary falling factorial.
inline Rational deg_falling(const Rational& x, unsigned n, const Rational& lambda) {
  Rational out = 1;
  Rational factor = x;
  for (unsigned i = 0; i < n; ++i) {
    out *= factor;
    factor -= lambda;
  }
  return out;
}

// Ordinary falling factorial (x)_n = x (x - 1) ... (x - n + 1).
inline Rational falling(const Rational& x, unsigned n) {
  return deg_falling(x, n, Rational(1));
}

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

// m! / (m - j)! as an integer; zero when j > m.
inline BigInt falling_int(unsigned m, unsigned j) {
  if (j > m) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < j; ++i) out *= m - i;
  return out;
}

// Zero outside 0 <= k <= n.
inline BigInt binomial(unsigned n, long long k) {
  if (k < 0 || static_cast<unsigned long long>(k) > n) return 0;
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt out = 1;
  for (unsigned i = 1; i <= kk; ++i) {
    out *= n - kk + i;
    out /= i;
  }
  return out;
}

}  // namespace degenbell
