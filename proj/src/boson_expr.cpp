#include "degenbell/boson.hpp"

#include <cstddef>
#include <utility>

namespace degenbell {

namespace ops {

namespace {
ExprPtr make(OperatorExpr::Node node) {
  return std::make_shared<const OperatorExpr>(std::move(node));
}
}  // namespace

ExprPtr a() { return make(OperatorExpr::Annihilate{}); }
ExprPtr ad() { return make(OperatorExpr::Create{}); }
ExprPtr n() { return make(OperatorExpr::Number{}); }

ExprPtr lit(Rational value) {
  return make(OperatorExpr::ScalarMul{std::move(value), make(OperatorExpr::Product{})});
}

ExprPtr mul(Rational coeff, ExprPtr child) {
  return make(OperatorExpr::ScalarMul{std::move(coeff), std::move(child)});
}

ExprPtr add(std::vector<ExprPtr> terms) { return make(OperatorExpr::Sum{std::move(terms)}); }

ExprPtr prod(std::vector<ExprPtr> factors) {
  return make(OperatorExpr::Product{std::move(factors)});
}

ExprPtr deg(ExprPtr base, unsigned power, Rational lambda, Rational shift) {
  return make(OperatorExpr::DegPower{std::move(base), power, std::move(lambda), std::move(shift)});
}

ExprPtr repeated(const ExprPtr& factor, unsigned count) {
  std::vector<ExprPtr> factors(count, factor);
  return prod(std::move(factors));
}

}  // namespace ops

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::optional<Rational> as_scalar(const OperatorExpr& expr) {
  using E = OperatorExpr;
  return std::visit(
      Overloaded{
          [](const E::Annihilate&) -> std::optional<Rational> { return std::nullopt; },
          [](const E::Create&) -> std::optional<Rational> { return std::nullopt; },
          [](const E::Number&) -> std::optional<Rational> { return std::nullopt; },
          [](const E::ScalarMul& node) -> std::optional<Rational> {
            auto inner = as_scalar(node.child);
            if (!inner) return std::nullopt;
            return node.coeff * *inner;
          },
          [](const E::Sum& node) -> std::optional<Rational> {
            Rational acc;
            for (const ExprPtr& t : node.terms) {
              auto inner = as_scalar(t);
              if (!inner) return std::nullopt;
              acc += *inner;
            }
            return acc;
          },
          [](const E::Product& node) -> std::optional<Rational> {
            Rational acc = 1;
            for (const ExprPtr& f : node.factors) {
              auto inner = as_scalar(f);
              if (!inner) return std::nullopt;
              acc *= *inner;
            }
            return acc;
          },
          [](const E::DegPower& node) -> std::optional<Rational> {
            auto inner = as_scalar(node.base);
            if (!inner) return std::nullopt;
            return deg_falling(*inner + node.shift, node.power, node.lambda);
          },
      },
      expr.node());
}

std::optional<Rational> as_scalar(const ExprPtr& expr) { return as_scalar(*expr); }

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  A,
  Ad,
  N,
  Lit,
  LParen,
  RParen,
  Plus,
  Minus,
  Star,
  Underscore,
  LBrace,
  RBrace,
  Comma,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  Rational value;  // literals only
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// A '-' starts a literal only where a factor may start, i.e. after one of
// these tokens (or at the very beginning).
bool minus_binds_to_literal(const std::vector<Token>& toks) {
  if (toks.empty()) return true;
  switch (toks.back().kind) {
    case Tok::Plus:
    case Tok::Minus:
    case Tok::Star:
    case Tok::LParen:
    case Tok::LBrace:
    case Tok::Comma:
    case Tok::Underscore:
      return true;
    default:
      return false;
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> toks;
  std::size_t pos = 0;
  auto scan_digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && is_digit(text[end])) ++end;
    return end;
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (is_digit(c) || (c == '-' && minus_binds_to_literal(toks) && pos + 1 < text.size() &&
                        is_digit(text[pos + 1]))) {
      std::size_t num_start = pos;
      if (c == '-') ++num_start;
      std::size_t num_end = scan_digits(num_start);
      BigInt num{std::string(text.substr(num_start, num_end - num_start))};
      if (c == '-') num = -num;
      BigInt den = 1;
      pos = num_end;
      if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_start = pos + 1;
        const std::size_t den_end = scan_digits(den_start);
        if (den_end == den_start)
          throw ParseError("malformed rational literal", den_start, {"digits"});
        den = BigInt{std::string(text.substr(den_start, den_end - den_start))};
        if (den == 0)
          throw ParseError("malformed rational literal", den_start, {"positive denominator"});
        pos = den_end;
      }
      toks.push_back(Token{Tok::Lit, start, Rational(num, den)});
      continue;
    }
    if (c == 'a') {
      if (pos + 1 < text.size() && text[pos + 1] == 'd') {
        toks.push_back(Token{Tok::Ad, start, {}});
        pos += 2;
      } else {
        toks.push_back(Token{Tok::A, start, {}});
        ++pos;
      }
      continue;
    }
    Tok kind;
    switch (c) {
      case 'N': kind = Tok::N; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '_': kind = Tok::Underscore; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError("unexpected character", pos, {"a", "ad", "N", "rational", "operator"});
    }
    toks.push_back(Token{kind, start, {}});
    ++pos;
  }
  toks.push_back(Token{Tok::End, text.size(), {}});
  return toks;
}

// Pulls scalar summands of a grouped expression into the DegPower shift:
// ((N + 2)...)_{n,lambda} means base N, shift 2. All-scalar groups keep
// base = group so the whole node still folds to a scalar.
std::pair<ExprPtr, Rational> split_shift(const ExprPtr& inner) {
  const auto* sum = std::get_if<OperatorExpr::Sum>(&inner->node());
  if (sum == nullptr || as_scalar(inner).has_value()) return {inner, Rational(0)};
  Rational shift;
  std::vector<ExprPtr> rest;
  for (const ExprPtr& t : sum->terms) {
    if (auto val = as_scalar(t))
      shift += *val;
    else
      rest.push_back(t);
  }
  if (rest.size() == 1) return {rest[0], shift};
  return {ops::add(std::move(rest)), shift};
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::End)
      fail({"'+'", "'-'", "'*'", "factor", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError("syntax error", peek().offset, std::move(expected));
  }

  static bool starts_factor(Tok kind) {
    switch (kind) {
      case Tok::A:
      case Tok::Ad:
      case Tok::N:
      case Tok::Lit:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms;
    terms.push_back(parse_term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool negate = take().kind == Tok::Minus;
      ExprPtr t = parse_term();
      terms.push_back(negate ? ops::mul(Rational(-1), std::move(t)) : std::move(t));
    }
    if (terms.size() == 1) return terms[0];
    return ops::add(std::move(terms));
  }

  ExprPtr parse_term() {
    std::vector<ExprPtr> factors;
    factors.push_back(parse_factor());
    for (;;) {
      if (peek().kind == Tok::Star) {
        take();
        factors.push_back(parse_factor());
      } else if (starts_factor(peek().kind)) {
        factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors[0];
    return ops::prod(std::move(factors));
  }

  ExprPtr parse_factor() {
    switch (peek().kind) {
      case Tok::A: take(); return ops::a();
      case Tok::Ad: take(); return ops::ad();
      case Tok::N: take(); return ops::n();
      case Tok::Lit: return ops::lit(take().value);
      case Tok::LParen: return parse_group();
      default:
        fail({"a", "ad", "N", "rational", "'('"});
    }
  }

  ExprPtr parse_group() {
    take();  // '('
    ExprPtr inner = parse_expr();
    if (peek().kind != Tok::RParen) fail({"')'"});
    take();
    if (peek().kind != Tok::Underscore) return inner;
    take();  // '_'
    if (peek().kind != Tok::LBrace) fail({"'{'"});
    take();
    if (peek().kind != Tok::Lit) fail({"nonnegative integer"});
    const Token& power_tok = take();
    if (!power_tok.value.is_integer() || power_tok.value.is_negative())
      throw ParseError("degenerate power index must be a nonnegative integer", power_tok.offset,
                       {"nonnegative integer"});
    if (power_tok.value.numerator() > 1000000)
      throw ParseError("degenerate power index out of range", power_tok.offset,
                       {"nonnegative integer"});
    const unsigned power = power_tok.value.numerator().convert_to<unsigned>();
    if (peek().kind != Tok::Comma) fail({"','"});
    take();
    if (peek().kind != Tok::Lit) fail({"rational"});
    const Rational lambda = take().value;
    if (peek().kind != Tok::RBrace) fail({"'}'"});
    take();
    auto [base, shift] = split_shift(inner);
    return ops::deg(std::move(base), power, lambda, std::move(shift));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace degenbell
