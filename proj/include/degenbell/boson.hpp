#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "degenbell/rational.hpp"

namespace degenbell {

class OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

// Expression tree over the ladder operators a, a† (spelled `ad`) and the
// number operator N = a†a. DegPower is the ordered product
//   (base + shift)(base + shift - lambda) ... (base + shift - (n-1) lambda),
// i.e. the degenerate falling factorial of an operator argument.
class OperatorExpr {
 public:
  struct Annihilate {};
  struct Create {};
  struct Number {};
  struct ScalarMul {
    Rational coeff;
    ExprPtr child;
  };
  struct Sum {
    std::vector<ExprPtr> terms;  // empty sum is the zero operator
  };
  struct Product {
    std::vector<ExprPtr> factors;  // ordered; empty product is the identity
  };
  struct DegPower {
    ExprPtr base;
    unsigned power = 0;
    Rational lambda;
    Rational shift;
  };
  using Node = std::variant<Annihilate, Create, Number, ScalarMul, Sum, Product, DegPower>;

  explicit OperatorExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

// Builders; scalars embed as ScalarMul over the empty product.
namespace ops {
ExprPtr a();
ExprPtr ad();
ExprPtr n();
ExprPtr lit(Rational value);
ExprPtr mul(Rational coeff, ExprPtr child);
ExprPtr add(std::vector<ExprPtr> terms);
ExprPtr prod(std::vector<ExprPtr> factors);
ExprPtr deg(ExprPtr base, unsigned power, Rational lambda, Rational shift);
// factor repeated `count` times (identity for count = 0)
ExprPtr repeated(const ExprPtr& factor, unsigned count);
}  // namespace ops

// The scalar value of an expression that contains no ladder operators.
std::optional<Rational> as_scalar(const OperatorExpr& expr);
std::optional<Rational> as_scalar(const ExprPtr& expr);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Grammar (whitespace insignificant, juxtaposition multiplies):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*')? factor)*
//   factor  := 'a' | 'ad' | 'N' | rational | group
//   group   := '(' expr ')' ('_' '{' integer ',' rational '}')?
// A '-' directly before digits where a factor may start binds to the
// literal; elsewhere it is the binary minus. The subscript form makes a
// DegPower; scalar summands inside the group move into its shift.
ExprPtr parse(std::string_view text);

// Finite sum c_{ij} (a†)^i a^j as a coefficient map. Zero coefficients are
// dropped eagerly, so equality of maps is equality of operators.
class NormalForm {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (creation power, annihilation power)

  NormalForm() = default;
  static NormalForm identity();
  static NormalForm monomial(unsigned create_pow, unsigned annihilate_pow,
                             Rational coeff = Rational(1));

  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(unsigned create_pow, unsigned annihilate_pow) const;
  void add_term(unsigned create_pow, unsigned annihilate_pow, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  // only (i, i) monomials, i.e. diagonal in the number basis
  bool is_diagonal() const;
  unsigned max_creation() const;
  unsigned max_degree() const;  // max i + j over kept terms

  // Terms ordered by total degree i + j descending, ties by i descending:
  // "2 (ad)^2 a^1 - 1/2 a^3 + 1".
  std::string str() const;

  NormalForm operator-() const;
  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const Rational& c);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(const Rational& c, NormalForm f) { return f *= c; }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Key, Rational> terms_;
};

// (a†)^i a^j (a†)^k a^l via the contraction sum over how many of the j
// annihilators pair with the k creators:
//   sum_s s! C(j,s) C(k,s) (a†)^{i+k-s} a^{j+l-s}.
NormalForm monomial_product(unsigned i, unsigned j, unsigned k, unsigned l);

NormalForm normal_order(const OperatorExpr& expr);
NormalForm normal_order(const ExprPtr& expr);

// (N + r)_{n,lambda} normally ordered; diagonal, and its diagonal holds the
// connection coefficients of the matching StirlingTable row.
NormalForm deg_number_power(unsigned n, unsigned r, const Rational& lambda);

// (N)_{n,lambda} (a†)^r normally ordered.
NormalForm creation_weighted_power(unsigned n, unsigned r, const Rational& lambda);

// N (N + r - lambda)_{k,lambda} == a† (N + 1 + r - lambda)_{k,lambda} a.
bool commutation_chain_check(unsigned k, unsigned r, const Rational& lambda);

// Reads a normal form as sum c_ij x^i (d/dx)^j acting on a polynomial
// given by its coefficient vector (index = degree); trailing zeros trimmed.
std::vector<Rational> apply_as_diff_operator(const NormalForm& nf,
                                             const std::vector<Rational>& poly);

enum class BosonOp : unsigned char { Annihilate, Create };

// Product of the word's letters, via closed-form monomial contraction.
NormalForm normal_order_word(std::span<const BosonOp> word);
// Same value by exhaustive single-swap rewriting (a a† -> a† a + 1); kept
// purely as a cross-check oracle for the closed form.
NormalForm normal_order_word_naive(std::span<const BosonOp> word);

}  // namespace degenbell
