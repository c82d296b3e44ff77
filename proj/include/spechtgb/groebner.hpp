#ifndef SPECHTGB_GROEBNER_HPP
#define SPECHTGB_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace spechtgb {

// ---------------------------------------------------------------------------
// Ideals

/// A Gröbner basis together with the order it was certified for.
template <class Field>
struct CertifiedBasis {
  MonomialOrder order;
  std::vector<Polynomial<Field>> basis;
};

/// Generators of an ideal of K[x_1..x_n]. The zero ideal is the value with
/// no generators; a generator equal to 0 is never stored.
template <class Field>
class IdealBasis {
public:
  using Poly = Polynomial<Field>;

  IdealBasis(std::size_t n, Field field, std::vector<Poly> generators = {})
      : n_(n), field_(std::move(field)) {
    for (auto& g : generators) {
      if (g.n() != n_ || !(g.field() == field_))
        throw std::invalid_argument("ideal generator lives in a different ring");
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static IdealBasis zero(std::size_t n, const Field& field) { return IdealBasis(n, field); }
  static IdealBasis unit(std::size_t n, const Field& field) { return IdealBasis(n, field, {Poly::one(n, field)}); }

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool is_zero_ideal() const { return generators_.empty(); }

  const std::optional<CertifiedBasis<Field>>& certified() const { return certified_; }
  void set_certified(CertifiedBasis<Field> gb) { certified_ = std::move(gb); }

private:
  std::size_t n_;
  Field field_;
  std::vector<Poly> generators_;
  std::optional<CertifiedBasis<Field>> certified_;
};

// ---------------------------------------------------------------------------
// Division

namespace detail {

template <class Field>
using Terms = std::vector<typename Polynomial<Field>::Term>;

/// Descending-order term list; the working form inside the engine.
template <class Field>
struct OrderedPoly {
  Terms<Field> terms;

  bool empty() const { return terms.empty(); }
  const Monomial& lead() const { return terms.front().monomial; }
  const typename Field::Element& lead_coeff() const { return terms.front().coeff; }
};

template <class Field>
OrderedPoly<Field> ordered(const Polynomial<Field>& f, const MonomialOrder& ord) {
  return {f.sorted_terms(ord)};
}

template <class Field>
Polynomial<Field> unordered(std::size_t n, const Field& field, Terms<Field> terms) {
  return Polynomial<Field>::from_terms(n, field, std::move(terms));
}

/// a[a_from..] - c·m·b[b_from..], both inputs descending under `ord`.
template <class Field>
Terms<Field> sub_shifted(const Field& F, const MonomialOrder& ord, const Terms<Field>& a, std::size_t a_from,
                         const Terms<Field>& b, std::size_t b_from, const Monomial& m,
                         const typename Field::Element& c) {
  Terms<Field> out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].monomial * m;
      have_bm = true;
    }
    auto cmp = j >= b.size() ? std::strong_ordering::greater
               : i >= a.size() ? std::strong_ordering::less
                               : ord.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, F.neg(F.mul(c, b[j].coeff))});
      ++j;
      have_bm = false;
    } else {
      auto v = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
      if (!F.is_zero(v)) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

template <class Field>
void make_monic(const Field& F, OrderedPoly<Field>& p) {
  if (p.empty() || F.is_one(p.lead_coeff())) return;
  auto inv = F.inv(p.lead_coeff());
  for (auto& t : p.terms) t.coeff = F.mul(t.coeff, inv);
}

/// Full reduction of f by `basis` (earliest divisor wins). When
/// `quotients` is non-null, the multipliers are accumulated per reducer.
template <class Field>
OrderedPoly<Field> reduce(const Field& F, const MonomialOrder& ord, OrderedPoly<Field> p,
                          const std::vector<const OrderedPoly<Field>*>& basis,
                          std::vector<Terms<Field>>* quotients = nullptr) {
  Terms<Field> rem;
  std::size_t pos = 0;
  while (pos < p.terms.size()) {
    const auto& t = p.terms[pos];
    std::size_t k = 0;
    while (k < basis.size() && !basis[k]->lead().divides(t.monomial)) ++k;
    if (k == basis.size()) {
      rem.push_back(std::move(p.terms[pos]));
      ++pos;
      continue;
    }
    const auto& g = *basis[k];
    auto c = F.div(t.coeff, g.lead_coeff());
    Monomial m = t.monomial / g.lead();
    if (quotients) (*quotients)[k].push_back({m, c});
    p.terms = sub_shifted(F, ord, p.terms, pos + 1, g.terms, 1, m, c);
    pos = 0;
  }
  return {std::move(rem)};
}

}  // namespace detail

template <class Field>
struct DivisionResult {
  std::vector<Polynomial<Field>> quotients;
  Polynomial<Field> remainder;
};

/// f = sum q_i g_i + r with no term of r divisible by any in_<(g_i).
template <class Field>
DivisionResult<Field> divide(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& divisors,
                             const MonomialOrder& ord) {
  const Field& F = f.field();
  std::vector<detail::OrderedPoly<Field>> gs;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (g.n() != f.n()) throw std::invalid_argument("divisor lives in a different ring");
    gs.push_back(detail::ordered(g, ord));
  }
  std::vector<const detail::OrderedPoly<Field>*> ptrs;
  for (auto& g : gs) ptrs.push_back(&g);
  std::vector<detail::Terms<Field>> q(gs.size());
  auto r = detail::reduce(F, ord, detail::ordered(f, ord), ptrs, &q);
  DivisionResult<Field> out{{}, detail::unordered(f.n(), F, std::move(r.terms))};
  for (auto& qt : q) out.quotients.push_back(detail::unordered(f.n(), F, std::move(qt)));
  return out;
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& basis,
                              const MonomialOrder& ord) {
  const Field& F = f.field();
  std::vector<detail::OrderedPoly<Field>> gs;
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero polynomial in basis");
    gs.push_back(detail::ordered(g, ord));
  }
  std::vector<const detail::OrderedPoly<Field>*> ptrs;
  for (auto& g : gs) ptrs.push_back(&g);
  return detail::unordered(f.n(), F, detail::reduce(F, ord, detail::ordered(f, ord), ptrs).terms);
}

/// lcm/in(f)·f/lc(f) − lcm/in(g)·g/lc(g)
template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of the zero polynomial");
  const Field& F = f.field();
  auto [mf, cf] = leading_term(f, ord);
  auto [mg, cg] = leading_term(g, ord);
  Monomial l = lcm(mf, mg);
  return f.shifted(l / mf, F.inv(cf)) - g.shifted(l / mg, F.inv(cg));
}

// ---------------------------------------------------------------------------
// Buchberger

struct BuchbergerOptions {
  bool chain_criterion = true;
  /// Maximum number of S-polynomial reductions before giving up.
  std::size_t max_reductions = 500000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;

  GroebnerStats& operator+=(const GroebnerStats& o) {
    pairs_created += o.pairs_created;
    reductions += o.reductions;
    zero_reductions += o.zero_reductions;
    skipped_coprime += o.skipped_coprime;
    skipped_chain += o.skipped_chain;
    return *this;
  }
};

namespace detail {

/// Pending critical pairs, selected by (total degree of lcm, j, i).
class PairQueue {
public:
  void add(std::size_t i, std::size_t j, int degree) {
    queue_.insert({degree, j, i});
    grow(j + 1);
    pending_[i][j] = pending_[j][i] = 1;
  }
  bool empty() const { return queue_.empty(); }
  std::pair<std::size_t, std::size_t> pop() {
    auto [d, j, i] = *queue_.begin();
    queue_.erase(queue_.begin());
    pending_[i][j] = pending_[j][i] = 0;
    return {i, j};
  }
  bool pending(std::size_t i, std::size_t j) const {
    return i < pending_.size() && j < pending_.size() && pending_[i][j];
  }
  void grow(std::size_t size) {
    if (pending_.size() >= size) return;
    for (auto& row : pending_) row.resize(size, 0);
    pending_.resize(size, std::vector<char>(size, 0));
  }

private:
  std::set<std::tuple<int, std::size_t, std::size_t>> queue_;
  std::vector<std::vector<char>> pending_;
};

/// Buchberger's lcm (chain) criterion: some other basis element's leading
/// monomial divides lcm and both connecting pairs have been treated.
template <class Field>
std::optional<std::size_t> chain_witness(const std::vector<OrderedPoly<Field>>& g, const PairQueue& queue,
                                         std::size_t i, std::size_t j, const Monomial& l, std::size_t limit) {
  for (std::size_t k = 0; k < limit; ++k) {
    if (k == i || k == j) continue;
    if (!g[k].lead().divides(l)) continue;
    if (queue.pending(i, k) || queue.pending(j, k)) continue;
    return k;
  }
  return std::nullopt;
}

template <class Field>
OrderedPoly<Field> s_poly_ordered(const Field& F, const MonomialOrder& ord, const OrderedPoly<Field>& a,
                                  const OrderedPoly<Field>& b) {
  Monomial l = lcm(a.lead(), b.lead());
  Monomial ma = l / a.lead();
  Terms<Field> sa;
  auto ia = F.inv(a.lead_coeff());
  for (std::size_t k = 1; k < a.terms.size(); ++k)
    sa.push_back({a.terms[k].monomial * ma, F.mul(a.terms[k].coeff, ia)});
  auto ib = F.inv(b.lead_coeff());
  return {sub_shifted(F, ord, sa, 0, b.terms, 1, l / b.lead(), ib)};
}

}  // namespace detail

/// Reduced, monic Gröbner basis of <generators> under `ord`, sorted by
/// increasing leading monomial. An empty result means the zero ideal.
template <class Field>
std::vector<Polynomial<Field>> buchberger(const std::vector<Polynomial<Field>>& generators, const MonomialOrder& ord,
                                          const BuchbergerOptions& options = {}, GroebnerStats* stats = nullptr) {
  using detail::OrderedPoly;
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  if (generators.empty()) return {};
  const std::size_t n = generators.front().n();
  const Field F = generators.front().field();
  if (ord.n() != n) throw std::invalid_argument("monomial order has the wrong number of variables");

  std::vector<OrderedPoly<Field>> g;
  detail::PairQueue queue;
  auto reducers = [&]() {
    std::vector<const OrderedPoly<Field>*> ptrs;
    for (auto& p : g) ptrs.push_back(&p);
    return ptrs;
  };
  auto unit = [&]() { return std::vector<Polynomial<Field>>{Polynomial<Field>::one(n, F)}; };
  // Append a new (reduced, nonzero) element and its pairs.
  auto insert = [&](OrderedPoly<Field> p) {
    detail::make_monic(F, p);
    const std::size_t j = g.size();
    g.push_back(std::move(p));
    queue.grow(j + 1);
    for (std::size_t i = 0; i < j; ++i) {
      queue.add(i, j, lcm(g[i].lead(), g[j].lead()).degree());
      ++st.pairs_created;
    }
  };

  for (const auto& f : generators) {
    if (f.n() != n || !(f.field() == F)) throw std::invalid_argument("generators live in different rings");
    if (f.is_zero()) continue;
    auto r = detail::reduce(F, ord, detail::ordered(f, ord), reducers());
    if (r.empty()) continue;
    if (r.lead().is_one()) return unit();
    insert(std::move(r));
  }

  while (!queue.empty()) {
    auto [i, j] = queue.pop();
    if (g[i].lead().coprime(g[j].lead())) {
      ++st.skipped_coprime;
      continue;
    }
    Monomial l = lcm(g[i].lead(), g[j].lead());
    if (options.chain_criterion && detail::chain_witness(g, queue, i, j, l, g.size())) {
      ++st.skipped_chain;
      continue;
    }
    if (st.reductions >= options.max_reductions)
      throw BudgetExceeded("Buchberger exceeded its budget of " + std::to_string(options.max_reductions) +
                           " S-pair reductions");
    ++st.reductions;
    auto r = detail::reduce(F, ord, detail::s_poly_ordered(F, ord, g[i], g[j]), reducers());
    if (r.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.lead().is_one()) return unit();
    insert(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !g[k].lead().divides(g[i].lead())) continue;
      redundant = g[k].lead() != g[i].lead() || k < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial<Field>> out;
  for (std::size_t i : keep) {
    std::vector<const OrderedPoly<Field>*> others;
    for (std::size_t k : keep)
      if (k != i) others.push_back(&g[k]);
    auto r = detail::reduce(F, ord, g[i], others);
    out.push_back(detail::unordered(n, F, std::move(r.terms)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial<Field>& a, const Polynomial<Field>& b) {
    return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
  });
  return out;
}

/// Outcome of examining one critical pair during a Gröbner basis check.
struct PairRecord {
  enum class Outcome { reduced_to_zero, nonzero_remainder, coprime, chain };
  std::size_t i = 0, j = 0;
  Outcome outcome = Outcome::reduced_to_zero;
  std::size_t witness = 0;  ///< the k used by the chain criterion
};

inline const char* to_string(PairRecord::Outcome o) {
  switch (o) {
    case PairRecord::Outcome::reduced_to_zero: return "reduced_to_zero";
    case PairRecord::Outcome::nonzero_remainder: return "nonzero_remainder";
    case PairRecord::Outcome::coprime: return "coprime";
    case PairRecord::Outcome::chain: return "chain";
  }
  return "?";
}

struct GroebnerCertificate {
  bool is_groebner = true;
  std::vector<PairRecord> pairs;
  std::size_t reductions = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
};

/// Buchberger's criterion on a fixed set: every S-polynomial reduces to 0.
/// Stops at the first pair with a nonzero remainder.
template <class Field>
GroebnerCertificate is_groebner_basis(const std::vector<Polynomial<Field>>& basis, const MonomialOrder& ord,
                                      const BuchbergerOptions& options = {}, bool keep_records = true) {
  GroebnerCertificate cert;
  if (basis.empty()) return cert;
  const Field F = basis.front().field();
  std::vector<detail::OrderedPoly<Field>> g;
  for (const auto& f : basis) {
    if (f.is_zero()) throw std::invalid_argument("is_groebner_basis: zero polynomial in basis");
    g.push_back(detail::ordered(f, ord));
  }
  std::vector<const detail::OrderedPoly<Field>*> ptrs;
  for (auto& p : g) ptrs.push_back(&p);

  detail::PairQueue queue;
  queue.grow(g.size());
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.add(i, j, lcm(g[i].lead(), g[j].lead()).degree());

  while (!queue.empty()) {
    auto [i, j] = queue.pop();
    PairRecord rec{i, j};
    Monomial l = lcm(g[i].lead(), g[j].lead());
    if (g[i].lead().coprime(g[j].lead())) {
      rec.outcome = PairRecord::Outcome::coprime;
      ++cert.skipped_coprime;
    } else if (auto k = options.chain_criterion ? detail::chain_witness(g, queue, i, j, l, g.size())
                                                : std::optional<std::size_t>{}) {
      rec.outcome = PairRecord::Outcome::chain;
      rec.witness = *k;
      ++cert.skipped_chain;
    } else {
      ++cert.reductions;
      auto r = detail::reduce(F, ord, detail::s_poly_ordered(F, ord, g[i], g[j]), ptrs);
      if (!r.empty()) {
        rec.outcome = PairRecord::Outcome::nonzero_remainder;
        cert.is_groebner = false;
        cert.pairs.push_back(rec);
        return cert;
      }
    }
    if (keep_records) cert.pairs.push_back(rec);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Ideal operations

/// Reduced GB of B under ord, reusing B's certificate when it matches.
template <class Field>
std::vector<Polynomial<Field>> groebner_basis(const IdealBasis<Field>& b, const MonomialOrder& ord,
                                              const BuchbergerOptions& options = {}, GroebnerStats* stats = nullptr) {
  if (b.certified() && b.certified()->order == ord) return b.certified()->basis;
  return buchberger(b.generators(), ord, options, stats);
}

template <class Field>
IdealBasis<Field> with_groebner_basis(IdealBasis<Field> b, const MonomialOrder& ord,
                                      const BuchbergerOptions& options = {}, GroebnerStats* stats = nullptr) {
  auto gb = groebner_basis(b, ord, options, stats);
  b.set_certified({ord, std::move(gb)});
  return b;
}

template <class Field>
bool member_of_gb(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& gb, const MonomialOrder& ord) {
  if (f.is_zero()) return true;
  if (gb.empty()) return false;
  return normal_form(f, gb, ord).is_zero();
}

template <class Field>
bool ideal_membership(const Polynomial<Field>& f, const IdealBasis<Field>& b, const MonomialOrder& ord) {
  if (b.is_zero_ideal()) return f.is_zero();
  return member_of_gb(f, groebner_basis(b, ord), ord);
}

/// Mutual membership of all generators.
template <class Field>
bool ideal_equal(const IdealBasis<Field>& a, const IdealBasis<Field>& b, const MonomialOrder& ord) {
  auto ga = groebner_basis(a, ord);
  auto gb = groebner_basis(b, ord);
  for (const auto& f : a.generators())
    if (!member_of_gb(f, gb, ord)) return false;
  for (const auto& f : b.generators())
    if (!member_of_gb(f, ga, ord)) return false;
  return true;
}

/// A ∩ B via t·A + (1−t)·B and elimination of t under the block order
/// (t above everything, `ord` on x_1..x_n). The result carries its
/// reduced GB under `ord`.
template <class Field>
IdealBasis<Field> ideal_intersection(const IdealBasis<Field>& a, const IdealBasis<Field>& b, const MonomialOrder& ord,
                                     const BuchbergerOptions& options = {}, GroebnerStats* stats = nullptr) {
  using Poly = Polynomial<Field>;
  if (a.n() != b.n() || !(a.field() == b.field())) throw std::invalid_argument("ideal_intersection: ring mismatch");
  const std::size_t n = a.n();
  const Field& F = a.field();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return IdealBasis<Field>::zero(n, F);

  const Poly t = Poly::variable(n + 1, F, n);
  const Poly one_minus_t = Poly::one(n + 1, F) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.widened(1));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.widened(1));
  auto gb = buchberger(gens, ord.with_aux_top(), options, stats);

  std::vector<Poly> kept;
  for (const auto& g : gb)
    if (g.degree_in(n) <= 0) kept.push_back(g.dropped_last());
  IdealBasis<Field> out(n, F, kept);
  out.set_certified({ord, std::move(kept)});
  return out;
}

template <class Field>
IdealBasis<Field> ideal_intersection(const IdealBasis<Field>& a, const IdealBasis<Field>& b) {
  return ideal_intersection(a, b, MonomialOrder::lex(a.n()));
}

}  // namespace spechtgb

#endif  // SPECHTGB_GROEBNER_HPP
