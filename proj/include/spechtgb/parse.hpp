#ifndef SPECHTGB_PARSE_HPP
#define SPECHTGB_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "combinatorics.hpp"
#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace spechtgb {

/// `Q` or `F<p>` with p prime.
inline FieldSpec parse_field(std::string_view text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    detail::Cursor cur{text, 1};
    long p = cur.integer();
    if (!cur.at_end()) cur.fail("unexpected character in field");
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1, 2);
    }
  }
  throw ParseError("expected 'Q' or 'F<p>'", 1, 1);
}

/// `lex:3,1,2` (ascending ranking x3<x1<x2), `grlex:...`, `grevlex:...`,
/// `weight:w1,...,wn:lex:r1,...,rn`. A bare kind means the natural ranking.
inline MonomialOrder parse_order(std::string_view text, std::size_t n) {
  detail::Cursor cur{text};
  auto ranking = [&]() {
    std::vector<int> r;
    if (!cur.accept(':')) return MonomialOrder::identity(n);
    std::size_t start = cur.pos;
    do {
      long v = cur.integer();
      if (v < 1 || static_cast<std::size_t>(v) > n) cur.fail("variable index out of range");
      r.push_back(static_cast<int>(v - 1));
    } while (cur.accept(','));
    if (r.size() != n) throw ParseError("ranking must list all " + std::to_string(n) + " variables", 1, start + 1);
    return r;
  };

  auto finish = [&](auto make) {
    std::size_t start = cur.pos;
    try {
      auto order = make();
      if (!cur.at_end()) cur.fail("unexpected character in order");
      return order;
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1, start + 1);
    }
  };

  if (cur.accept("grevlex")) return finish([&] { return MonomialOrder::graded_revlex(ranking()); });
  if (cur.accept("grlex")) return finish([&] { return MonomialOrder::graded_lex(ranking()); });
  if (cur.accept("lex")) return finish([&] { return MonomialOrder::lex(ranking()); });
  if (cur.accept("weight")) {
    return finish([&] {
      cur.expect(':');
      std::vector<mpq_class> w;
      do {
        long num = cur.integer();
        long den = 1;
        if (cur.accept('/')) den = cur.integer();
        if (den == 0) cur.fail("zero denominator in weight");
        w.emplace_back(num, den);
      } while (cur.accept(','));
      if (w.size() != n) cur.fail("weight vector must have " + std::to_string(n) + " entries");
      std::vector<int> r = MonomialOrder::identity(n);
      if (cur.accept(':')) {
        if (!cur.accept("lex")) cur.fail("expected 'lex' tie-break");
        r = ranking();
      }
      return MonomialOrder::weight(std::move(w), std::move(r));
    });
  }
  cur.fail("unknown monomial order");
}

namespace detail {

template <class Field>
class PolynomialParser {
public:
  using Poly = Polynomial<Field>;

  PolynomialParser(std::string_view text, std::size_t n, const Field& field) : cur_{text}, n_(n), field_(field) {}

  Poly parse() {
    Poly p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected character");
    return p;
  }

private:
  Poly expr() {
    Poly acc(n_, field_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (cur_.accept('-'))
        negate = true;
      else if (!cur_.accept('+') && !first)
        break;
      Poly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (cur_.accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    if (cur_.accept('-')) return -factor();
    Poly base = primary();
    if (cur_.accept('^')) {
      long e = cur_.integer();
      if (e > 1000) cur_.fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.expect('(');
      Poly inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (c == 'x') {
      ++cur_.pos;
      std::size_t start = cur_.pos;
      long idx = cur_.integer();
      if (idx < 1 || static_cast<std::size_t>(idx) > n_) {
        cur_.pos = start;
        cur_.fail("variable index out of range");
      }
      return Poly::variable(n_, field_, static_cast<std::size_t>(idx - 1));
    }
    if (c >= '0' && c <= '9') {
      mpz_class num = big_integer();
      mpz_class den = 1;
      if (cur_.accept('/')) {
        std::size_t start = cur_.pos;
        den = big_integer();
        if (den == 0) {
          cur_.pos = start;
          cur_.fail("zero denominator");
        }
      }
      try {
        return Poly::constant(n_, field_, field_.from_fraction(num, den));
      } catch (const std::domain_error& e) {
        cur_.fail(e.what());
      }
    }
    cur_.fail("expected a number, variable or '('");
  }

  mpz_class big_integer() {
    cur_.skip_ws();
    std::size_t start = cur_.pos;
    while (cur_.pos < cur_.text.size() && cur_.text[cur_.pos] >= '0' && cur_.text[cur_.pos] <= '9') ++cur_.pos;
    if (start == cur_.pos) cur_.fail("expected an integer");
    return mpz_class(std::string(cur_.text.substr(start, cur_.pos - start)));
  }

  Cursor cur_;
  std::size_t n_;
  Field field_;
};

}  // namespace detail

/// Parse integers, rationals `a/b`, variables `x1..xn`, `+ - * ^` and
/// parentheses.
template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, std::size_t n, const Field& field) {
  return detail::PolynomialParser<Field>(text, n, field).parse();
}

/// Terms in decreasing order under `ord`, e.g. `x1^2*x2 - 3/2*x3`.
template <class Field>
std::string print_polynomial(const Polynomial<Field>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return "0";
  const Field& F = f.field();
  std::string s;
  bool first = true;
  for (const auto& t : f.sorted_terms(ord)) {
    auto c = t.coeff;
    bool negative = F.sign(c) < 0;
    if (negative) c = F.neg(c);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one())
      s += F.to_string(c);
    else if (F.is_one(c))
      s += t.monomial.to_string();
    else
      s += F.to_string(c) + "*" + t.monomial.to_string();
  }
  return s;
}

/// Canonical printing (lex with x1 largest, matching the storage order).
template <class Field>
std::string to_string(const Polynomial<Field>& f) {
  std::vector<int> ranking(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) ranking[i] = static_cast<int>(f.n() - 1 - i);
  return f.n() == 0 ? (f.is_zero() ? "0" : f.field().to_string(f.terms()[0].coeff))
                    : print_polynomial(f, MonomialOrder::lex(ranking));
}

}  // namespace spechtgb

#endif  // SPECHTGB_PARSE_HPP
