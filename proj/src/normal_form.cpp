#include "degenbell/boson.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <variant>

namespace degenbell {

NormalForm NormalForm::identity() { return monomial(0, 0); }

NormalForm NormalForm::monomial(unsigned create_pow, unsigned annihilate_pow, Rational coeff) {
  NormalForm out;
  out.add_term(create_pow, annihilate_pow, coeff);
  return out;
}

Rational NormalForm::coeff(unsigned create_pow, unsigned annihilate_pow) const {
  const auto it = terms_.find(Key{create_pow, annihilate_pow});
  return it == terms_.end() ? Rational(0) : it->second;
}

void NormalForm::add_term(unsigned create_pow, unsigned annihilate_pow, const Rational& c) {
  if (c.is_zero()) return;
  const Key key{create_pow, annihilate_pow};
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool NormalForm::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.first == t.first.second; });
}

unsigned NormalForm::max_creation() const {
  unsigned out = 0;
  for (const auto& [key, c] : terms_) out = std::max(out, key.first);
  return out;
}

unsigned NormalForm::max_degree() const {
  unsigned out = 0;
  for (const auto& [key, c] : terms_) out = std::max(out, key.first + key.second);
  return out;
}

std::string NormalForm::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Key, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) {
    const unsigned dx = x->first.first + x->first.second;
    const unsigned dy = y->first.first + y->first.second;
    if (dx != dy) return dx > dy;
    return x->first.first > y->first.first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const auto& [key, c] = *t;
    if (first) {
      out += c.str();
    } else {
      out += c.is_negative() ? " - " : " + ";
      out += abs(c).str();
    }
    if (key.first > 0) out += " (ad)^" + std::to_string(key.first);
    if (key.second > 0) out += " a^" + std::to_string(key.second);
    first = false;
  }
  return out;
}

NormalForm NormalForm::operator-() const {
  NormalForm out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

NormalForm monomial_product(unsigned i, unsigned j, unsigned k, unsigned l) {
  NormalForm out;
  const unsigned smax = std::min(j, k);
  for (unsigned s = 0; s <= smax; ++s) {
    const Rational c =
        Rational(factorial(s)) * Rational(binomial(j, s)) * Rational(binomial(k, s));
    out.add_term(i + k - s, j + l - s, c);
  }
  return out;
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const Rational c = ca * cb;
      for (const auto& [km, cm] : monomial_product(ka.first, ka.second, kb.first, kb.second).terms_)
        out.add_term(km.first, km.second, c * cm);
    }
  return out;
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

NormalForm normal_order(const OperatorExpr& expr) {
  using E = OperatorExpr;
  return std::visit(
      Overloaded{
          [](const E::Annihilate&) { return NormalForm::monomial(0, 1); },
          [](const E::Create&) { return NormalForm::monomial(1, 0); },
          [](const E::Number&) { return NormalForm::monomial(1, 1); },
          [](const E::ScalarMul& node) {
            NormalForm f = normal_order(node.child);
            f *= node.coeff;
            return f;
          },
          [](const E::Sum& node) {
            NormalForm acc;
            for (const ExprPtr& t : node.terms) acc += normal_order(t);
            return acc;
          },
          [](const E::Product& node) {
            NormalForm acc = NormalForm::identity();
            for (const ExprPtr& f : node.factors) acc = acc * normal_order(f);
            return acc;
          },
          [](const E::DegPower& node) {
            const NormalForm base = normal_order(node.base);
            NormalForm acc = NormalForm::identity();
            Rational offset = node.shift;
            for (unsigned step = 0; step < node.power; ++step) {
              NormalForm factor = base;
              factor.add_term(0, 0, offset);
              acc = acc * factor;
              offset -= node.lambda;
            }
            return acc;
          },
      },
      expr.node());
}

NormalForm normal_order(const ExprPtr& expr) { return normal_order(*expr); }

NormalForm deg_number_power(unsigned n, unsigned r, const Rational& lambda) {
  return normal_order(ops::deg(ops::n(), n, lambda, Rational(r)));
}

NormalForm creation_weighted_power(unsigned n, unsigned r, const Rational& lambda) {
  return normal_order(
      ops::prod({ops::deg(ops::n(), n, lambda, Rational(0)), ops::repeated(ops::ad(), r)}));
}

bool commutation_chain_check(unsigned k, unsigned r, const Rational& lambda) {
  const Rational shift = Rational(r) - lambda;
  const NormalForm lhs =
      normal_order(ops::prod({ops::n(), ops::deg(ops::n(), k, lambda, shift)}));
  const NormalForm rhs = normal_order(
      ops::prod({ops::ad(), ops::deg(ops::n(), k, lambda, shift + Rational(1)), ops::a()}));
  return lhs == rhs;
}

std::vector<Rational> apply_as_diff_operator(const NormalForm& nf,
                                             const std::vector<Rational>& poly) {
  std::vector<Rational> out;
  for (const auto& [key, c] : nf.terms()) {
    const auto [i, j] = key;
    for (unsigned m = j; m < poly.size(); ++m) {
      if (poly[m].is_zero()) continue;
      const unsigned target = m - j + i;
      if (out.size() <= target) out.resize(target + 1);
      out[target] += c * Rational(falling_int(m, j)) * poly[m];
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

NormalForm normal_order_word(std::span<const BosonOp> word) {
  NormalForm acc = NormalForm::identity();
  for (const BosonOp op : word) {
    const NormalForm letter = op == BosonOp::Create ? NormalForm::monomial(1, 0)
                                                    : NormalForm::monomial(0, 1);
    acc = acc * letter;
  }
  return acc;
}

NormalForm normal_order_word_naive(std::span<const BosonOp> word) {
  NormalForm out;
  std::vector<std::vector<BosonOp>> pending;
  pending.emplace_back(word.begin(), word.end());
  while (!pending.empty()) {
    std::vector<BosonOp> w = std::move(pending.back());
    pending.pop_back();
    std::size_t swap_at = w.size();
    for (std::size_t idx = 0; idx + 1 < w.size(); ++idx)
      if (w[idx] == BosonOp::Annihilate && w[idx + 1] == BosonOp::Create) {
        swap_at = idx;
        break;
      }
    if (swap_at == w.size()) {
      // already ordered: every a† precedes every a
      const auto creations =
          static_cast<unsigned>(std::count(w.begin(), w.end(), BosonOp::Create));
      out.add_term(creations, static_cast<unsigned>(w.size()) - creations, Rational(1));
      continue;
    }
    std::vector<BosonOp> swapped = w;
    std::swap(swapped[swap_at], swapped[swap_at + 1]);
    std::vector<BosonOp> contracted;
    contracted.reserve(w.size() - 2);
    contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(swap_at));
    contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(swap_at) + 2,
                      w.end());
    pending.push_back(std::move(swapped));
    pending.push_back(std::move(contracted));
  }
  return out;
}

}  // namespace degenbell
