#ifndef SPECHTGB_POLYNOMIAL_HPP
#define SPECHTGB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace spechtgb {

/// Sparse polynomial in K[x_1..x_n] with exact coefficients from `Field`.
///
/// Terms are kept in the canonical (order-independent) monomial order,
/// largest first, with no zero coefficients. Views under a particular
/// monomial order are produced on demand by `sorted_terms`.
template <class Field>
class Polynomial {
public:
  using Element = typename Field::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial(std::size_t n, Field field) : n_(n), field_(std::move(field)) { (void)Monomial(n); }

  static Polynomial constant(std::size_t n, const Field& field, const Element& c) {
    Polynomial p(n, field);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(n), c});
    return p;
  }
  static Polynomial one(std::size_t n, const Field& field) { return constant(n, field, field.one()); }

  /// x_{i+1} (0-based index).
  static Polynomial variable(std::size_t n, const Field& field, std::size_t i) {
    if (i >= n) throw std::out_of_range("variable index out of range");
    Polynomial p(n, field);
    p.terms_.push_back({Monomial::variable(n, i), field.one()});
    return p;
  }

  static Polynomial term(const Field& field, const Monomial& m, const Element& c) {
    Polynomial p(m.size(), field);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Build from arbitrary terms; duplicates are combined and zeros dropped.
  static Polynomial from_terms(std::size_t n, const Field& field, std::vector<Term> terms) {
    Polynomial p(n, field);
    for (const auto& t : terms)
      if (t.monomial.size() != n) throw std::invalid_argument("monomial width does not match ring dimension");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
        p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      else
        p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [&](const Term& t) { return field.is_zero(t.coeff); });
    return p;
  }

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    return it != terms_.end() && it->monomial == m ? it->coeff : field_.zero();
  }

  /// Terms in decreasing order under `ord`.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const {
    auto out = terms_;
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.less(b.monomial, a.monomial); });
    return out;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_compatible(f, g);
    std::vector<Term> prod;
    prod.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) prod.push_back({a.monomial * b.monomial, f.field_.mul(a.coeff, b.coeff)});
    return from_terms(f.n_, f.field_, std::move(prod));
  }

  Polynomial scaled(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(n_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  /// c·m·f
  Polynomial shifted(const Monomial& m, const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(n_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.monomial = t.monomial * m;
      t.coeff = field_.mul(t.coeff, c);
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(n_, field_), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// Same polynomial in a ring with `extra` more trailing variables.
  Polynomial widened(std::size_t extra) const {
    Polynomial r(n_ + extra, field_);
    for (const auto& t : terms_) r.terms_.push_back({t.monomial.widened(extra), t.coeff});
    return r;
  }

  /// Restrict to the first n-1 variables; the last variable must not occur.
  Polynomial dropped_last() const {
    Polynomial r(n_ - 1, field_);
    for (const auto& t : terms_) {
      if (t.monomial[n_ - 1]) throw std::domain_error("polynomial still involves the dropped variable");
      r.terms_.push_back({t.monomial.without(n_ - 1), t.coeff});
    }
    return r;
  }

  /// Apply a variable substitution x_i -> x_{perm[i]} (0-based).
  Polynomial renamed(std::span<const int> perm) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      Monomial m(n_);
      for (std::size_t i = 0; i < n_; ++i) m.set(static_cast<std::size_t>(perm[i]), t.monomial[i]);
      out.push_back({m, t.coeff});
    }
    return from_terms(n_, field_, std::move(out));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.n_ == g.n_ && f.field_ == g.field_ && f.terms_ == g.terms_;
  }

private:
  static void check_compatible(const Polynomial& f, const Polynomial& g) {
    if (f.n_ != g.n_) throw std::invalid_argument("polynomials live in rings of different dimension");
    if (!(f.field_ == g.field_)) throw std::invalid_argument("polynomials have different coefficient fields");
  }

  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    check_compatible(f, g);
    Polynomial r(f.n_, f.field_);
    const auto& F = f.field_;
    auto a = f.terms_.begin(), b = g.terms_.begin();
    while (a != f.terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end() || (a != f.terms_.end() && a->monomial > b->monomial)) {
        r.terms_.push_back(*a++);
      } else if (a == f.terms_.end() || b->monomial > a->monomial) {
        r.terms_.push_back({b->monomial, subtract ? F.neg(b->coeff) : b->coeff});
        ++b;
      } else {
        Element c = subtract ? F.sub(a->coeff, b->coeff) : F.add(a->coeff, b->coeff);
        if (!F.is_zero(c)) r.terms_.push_back({a->monomial, std::move(c)});
        ++a;
        ++b;
      }
    }
    return r;
  }

  std::size_t n_;
  Field field_;
  std::vector<Term> terms_;
};

/// Exact value of f at a point of K^n.
template <class Field>
typename Field::Element evaluate(const Polynomial<Field>& f, std::span<const typename Field::Element> point) {
  if (point.size() != f.n()) throw std::invalid_argument("evaluate: point has wrong dimension");
  const Field& F = f.field();
  auto sum = F.zero();
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < f.n(); ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v = F.mul(v, point[i]);
    sum = F.add(sum, v);
  }
  return sum;
}

template <class Field>
typename Field::Element evaluate(const Polynomial<Field>& f, const std::vector<typename Field::Element>& point) {
  return evaluate(f, std::span<const typename Field::Element>(point));
}

/// in_<(f) together with its coefficient.
template <class Field>
std::pair<Monomial, typename Field::Element> leading_term(const Polynomial<Field>& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw std::domain_error("leading_term of the zero polynomial");
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ord.less(best->monomial, t.monomial)) best = &t;
  return {best->monomial, best->coeff};
}

/// (g_0, ..., g_d) with f = sum g_k x_n^k, each g_k in K[x_1..x_{n-1}].
template <class Field>
std::vector<Polynomial<Field>> coefficients_in_last_variable(const Polynomial<Field>& f) {
  if (f.is_zero()) throw std::domain_error("coefficients_in_last_variable of the zero polynomial");
  if (f.n() < 1) throw std::invalid_argument("ring has no variables");
  const std::size_t last = f.n() - 1;
  const int d = f.degree_in(last);
  std::vector<std::vector<typename Polynomial<Field>::Term>> buckets(d + 1);
  for (const auto& t : f.terms()) buckets[t.monomial[last]].push_back({t.monomial.without(last), t.coeff});
  std::vector<Polynomial<Field>> out;
  for (auto& b : buckets) out.push_back(Polynomial<Field>::from_terms(last, f.field(), std::move(b)));
  return out;
}

}  // namespace spechtgb

#endif  // SPECHTGB_POLYNOMIAL_HPP
