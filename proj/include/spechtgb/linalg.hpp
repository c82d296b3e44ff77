#ifndef SPECHTGB_LINALG_HPP
#define SPECHTGB_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "polynomial.hpp"

namespace spechtgb {

/// Exact row-echelon basis of a space of polynomials, viewed as vectors
/// over the monomial basis. Rows are stored triangular: each row's pivot is
/// its largest monomial in the canonical order, and all other entries are
/// smaller.
template <class Field>
class EchelonBasis {
public:
  using Poly = Polynomial<Field>;

  /// Adds f to the span; returns true when f was independent of the rows.
  bool insert(const Poly& f) {
    auto r = reduce(f);
    if (r.is_zero()) return false;
    auto inv = r.field().inv(r.terms().front().coeff);
    r = r.scaled(inv);
    pivots_.emplace(r.terms().front().monomial, std::move(r));
    return true;
  }

  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  std::size_t rank() const { return pivots_.size(); }

  Poly reduce(const Poly& f) const {
    Poly v = f;
    // Monomials strictly decrease as we walk, so each pivot is hit once.
    std::size_t pos = 0;
    while (pos < v.terms().size()) {
      const auto& t = v.terms()[pos];
      auto it = pivots_.find(t.monomial);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      v = v - it->second.scaled(t.coeff);
    }
    return v;
  }

private:
  std::map<Monomial, Poly> pivots_;
};

/// Exact rank of the span of `polys`.
template <class Field>
std::size_t span_rank(const std::vector<Polynomial<Field>>& polys) {
  EchelonBasis<Field> basis;
  for (const auto& p : polys) basis.insert(p);
  return basis.rank();
}

}  // namespace spechtgb

#endif  // SPECHTGB_LINALG_HPP
