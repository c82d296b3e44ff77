#ifndef SPECHTGB_SPECHT_HPP
#define SPECHTGB_SPECHT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace spechtgb {

/// f_T: product over columns of (x_i − x_j), i above j.
template <class Field>
Polynomial<Field> specht_polynomial(const Tableau& t, const Field& field) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  using Poly = Polynomial<Field>;
  Poly f = Poly::one(n, field);
  for (const auto& col : t.columns())
    for (std::size_t a = 0; a < col.size(); ++a)
      for (std::size_t b = a + 1; b < col.size(); ++b)
        f *= Poly::variable(n, field, col[a] - 1) - Poly::variable(n, field, col[b] - 1);
  return f;
}

/// Sign of a permutation of 1..n given in one-line notation.
inline int permutation_sign(std::span<const int> sigma) {
  std::vector<char> seen(sigma.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// sigma (one-line, 1-based) maps every column of T onto itself.
inline bool is_column_stabilizer(const Tableau& t, std::span<const int> sigma) {
  if (sigma.size() != static_cast<std::size_t>(t.n())) return false;
  std::vector<int> sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  for (const auto& col : t.columns())
    for (int v : col)
      if (std::find(col.begin(), col.end(), sigma[v - 1]) == col.end()) return false;
  return true;
}

/// f_{σT} == sgn(σ) f_T, exactly.
template <class Field>
bool column_stabilizer_sign_check(const Tableau& t, std::span<const int> sigma, const Field& field) {
  if (!is_column_stabilizer(t, sigma)) throw std::invalid_argument("permutation is not a column stabilizer");
  auto lhs = specht_polynomial(t.permuted(sigma), field);
  auto rhs = specht_polynomial(t, field);
  if (permutation_sign(sigma) < 0) rhs = -rhs;
  return lhs == rhs;
}

/// prod x_i^{d_i - 1}, d_i the 1-based row of i; the lex (x1<...<xn)
/// initial monomial of f_T for column-standard T.
inline Monomial initial_monomial_formula(const Tableau& t) {
  if (!t.is_column_standard()) throw std::invalid_argument("initial_monomial_formula needs a column-standard tableau");
  Monomial m(static_cast<std::size_t>(t.n()));
  for (int i = 1; i <= t.n(); ++i) m.set(static_cast<std::size_t>(i - 1), t.row_of(i) - 1);
  return m;
}

template <class Field>
struct SpechtGenerator {
  Tableau tableau;
  Polynomial<Field> polynomial;
  Partition shape() const { return tableau.shape(); }
};

enum class GeneratorMode { all_tableaux, column_standard, standard };

inline const char* to_string(GeneratorMode m) {
  switch (m) {
    case GeneratorMode::all_tableaux: return "all_tableaux";
    case GeneratorMode::column_standard: return "column_standard";
    case GeneratorMode::standard: return "standard";
  }
  return "?";
}

namespace detail {

/// Canonical sign: leading coefficient under lex x1<...<xn made +1.
template <class Field>
Polynomial<Field> sign_normalized(const Polynomial<Field>& f) {
  if (f.is_zero()) return f;
  auto [m, c] = leading_term(f, MonomialOrder::lex(f.n()));
  const auto& F = f.field();
  if (F.equal(c, F.neg(F.one())) && !F.is_one(c)) return -f;
  return f;
}

template <class Field>
struct PolyLess {
  bool operator()(const Polynomial<Field>& a, const Polynomial<Field>& b) const {
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (x[i].monomial != y[i].monomial) return x[i].monomial < y[i].monomial;
      if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
    }
    return x.size() < y.size();
  }
};

inline TableauMode tableau_mode(GeneratorMode m) {
  switch (m) {
    case GeneratorMode::all_tableaux: return TableauMode::all;
    case GeneratorMode::column_standard: return TableauMode::column_standard;
    case GeneratorMode::standard: return TableauMode::standard;
  }
  return TableauMode::all;
}

/// Sign-normalized, deduplicated Specht polynomials of the given tableaux,
/// in first-seen order.
template <class Field>
void append_unique(std::vector<SpechtGenerator<Field>>& out,
                   std::map<Polynomial<Field>, std::size_t, PolyLess<Field>>& seen, const std::vector<Tableau>& tabs,
                   const Field& field) {
  for (const auto& t : tabs) {
    auto f = sign_normalized(specht_polynomial(t, field));
    if (seen.emplace(f, out.size()).second) out.push_back({t, std::move(f)});
  }
}

}  // namespace detail

/// Generators f_T for T ranging over the chosen tableaux of every shape in
/// the lower filter, collapsed up to sign. Shapes are visited in the
/// filter's order.
template <class Field>
std::vector<SpechtGenerator<Field>> specht_generators(const PartitionFilter& filter, GeneratorMode mode,
                                                      const Field& field) {
  if (filter.empty()) throw std::invalid_argument("specht_generators: empty filter");
  if (filter.kind() != FilterKind::lower) throw std::invalid_argument("specht_generators needs a lower filter");
  std::vector<SpechtGenerator<Field>> out;
  std::map<Polynomial<Field>, std::size_t, detail::PolyLess<Field>> seen;
  for (const auto& lambda : filter.members())
    detail::append_unique(out, seen, enumerate_tableaux(lambda, detail::tableau_mode(mode)), field);
  return out;
}

/// {f_T : T in STab(mu), mu ⊴ lambda, mu_1 = lambda_1}.
template <class Field>
std::vector<SpechtGenerator<Field>> remark35_generators(const Partition& lambda, const Field& field) {
  std::vector<SpechtGenerator<Field>> out;
  std::map<Polynomial<Field>, std::size_t, detail::PolyLess<Field>> seen;
  for (const auto& mu : enumerate_partitions(lambda.n()))
    if (dominates(lambda, mu) && mu[0] == lambda[0])
      detail::append_unique(out, seen, enumerate_tableaux(mu, TableauMode::standard), field);
  return out;
}

template <class Field>
std::vector<Polynomial<Field>> polynomials_of(const std::vector<SpechtGenerator<Field>>& gens) {
  std::vector<Polynomial<Field>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.polynomial);
  return out;
}

struct SpanRank {
  std::size_t rank = 0;
  std::size_t standard_count = 0;
  /// Every f_T, T in Tab(lambda), is a combination of the standard ones.
  bool spanned_by_standard = false;
};

/// Exact rank over Q of {f_T : T in Tab(lambda)} against |STab(lambda)|.
inline SpanRank standard_span_rank(const Partition& lambda) {
  const Rationals q;
  EchelonBasis<Rationals> all, standard;
  SpanRank out;
  for (const auto& t : enumerate_tableaux(lambda, TableauMode::standard)) {
    standard.insert(specht_polynomial(t, q));
    ++out.standard_count;
  }
  out.spanned_by_standard = standard.rank() == out.standard_count;
  for (const auto& t : enumerate_tableaux(lambda, TableauMode::all)) {
    auto f = specht_polynomial(t, q);
    all.insert(f);
    if (out.spanned_by_standard && !standard.contains(f)) out.spanned_by_standard = false;
  }
  out.rank = all.rank();
  return out;
}

}  // namespace spechtgb

#endif  // SPECHTGB_SPECHT_HPP
