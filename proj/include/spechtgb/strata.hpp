#ifndef SPECHTGB_STRATA_HPP
#define SPECHTGB_STRATA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace spechtgb {

/// Portable uniform draws on top of mt19937_64 (the standard
/// distributions are implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1)); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

template <class Field>
struct StratumSample {
  Partition mu;
  std::vector<std::vector<typename Field::Element>> points;
  std::uint64_t seed = 0;
};

namespace detail {

template <class Field>
typename Field::Element random_value(const Field& field, Rng& rng) {
  if constexpr (std::is_same_v<Field, Rationals>)
    return field.from_int(static_cast<long>(rng.uniform(-1000, 1000)));
  else
    return field.from_int(static_cast<long>(rng.uniform(0, field.characteristic() - 1)));
}

}  // namespace detail

/// `count` points of H_mu: distinct values for the blocks, assigned to a
/// uniformly random arrangement of the coordinates.
template <class Field>
StratumSample<Field> sample_stratum(const Partition& mu, std::size_t count, std::uint64_t seed, const Field& field) {
  if constexpr (!std::is_same_v<Field, Rationals>) {
    if (field.characteristic() < mu.length())
      throw UnsupportedField("F" + std::to_string(field.characteristic()) + " has fewer than " +
                             std::to_string(mu.length()) + " elements");
  }
  Rng rng(seed);
  StratumSample<Field> out{mu, {}, seed};
  const std::size_t n = static_cast<std::size_t>(mu.n());
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<typename Field::Element> values;
    while (values.size() < mu.length()) {
      auto v = detail::random_value(field, rng);
      if (std::none_of(values.begin(), values.end(), [&](const auto& w) { return field.equal(v, w); }))
        values.push_back(v);
    }
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    rng.shuffle(positions);
    std::vector<typename Field::Element> point(n, field.zero());
    std::size_t pos = 0;
    for (std::size_t b = 0; b < mu.length(); ++b)
      for (int k = 0; k < mu[b]; ++k) point[positions[pos++]] = values[b];
    out.points.push_back(std::move(point));
  }
  return out;
}

/// Linear prime ideal of W_pi (points constant on the blocks of pi).
template <class Field>
IdealBasis<Field> subspace_ideal(const SetPartition& pi, const Field& field) {
  using Poly = Polynomial<Field>;
  const std::size_t n = static_cast<std::size_t>(pi.n());
  std::vector<Poly> gens;
  for (const auto& block : pi.blocks())
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      gens.push_back(Poly::variable(n, field, block[k] - 1) - Poly::variable(n, field, block[k + 1] - 1));
  return IdealBasis<Field>(n, field, std::move(gens));
}

struct OracleStats {
  std::size_t subspaces = 0;
  std::size_t absorbed = 0;
  GroebnerStats groebner;
};

/// J_G for an upper filter G, as the intersection of the subspace ideals
/// I(W_pi) over all set partitions pi whose type lies in G. The result
/// carries its reduced GB under lex x1<...<xn.
template <class Field>
IdealBasis<Field> vanishing_ideal_oracle(const PartitionFilter& g, const Field& field,
                                         const BuchbergerOptions& options = {}, OracleStats* stats = nullptr) {
  if (!field.infinite()) throw UnsupportedField("the vanishing-ideal oracle needs an infinite field");
  if (g.empty()) throw std::invalid_argument("vanishing_ideal_oracle: empty filter");
  if (g.kind() != FilterKind::upper) throw std::invalid_argument("vanishing_ideal_oracle needs an upper filter");
  OracleStats local;
  OracleStats& st = stats ? *stats : local;
  const std::size_t n = static_cast<std::size_t>(g.n());
  const MonomialOrder lex = MonomialOrder::lex(n);

  std::vector<IdealBasis<Field>> parts;
  for (const auto& mu : g.members())
    for (const auto& pi : set_partitions_of_type(mu)) parts.push_back(subspace_ideal(pi, field));
  st.subspaces = parts.size();

  // A subspace ideal containing another one in the list changes nothing.
  std::vector<EchelonBasis<Field>> spans(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& f : parts[i].generators()) spans[i].insert(f);
  std::vector<IdealBasis<Field>> kept;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < parts.size() && !absorbed; ++j) {
      if (i == j) continue;
      const auto& gj = parts[j].generators();
      bool contains_j = std::all_of(gj.begin(), gj.end(), [&](const auto& f) { return spans[i].contains(f); });
      // equal spans only arise for equal pi
      absorbed = contains_j && (spans[i].rank() > spans[j].rank() || j < i);
    }
    if (absorbed)
      ++st.absorbed;
    else
      kept.push_back(parts[i]);
  }

  if (std::any_of(kept.begin(), kept.end(), [](const auto& b) { return b.is_zero_ideal(); }))
    return IdealBasis<Field>::zero(n, field);

  IdealBasis<Field> acc = with_groebner_basis(kept.front(), lex, options, &st.groebner);
  for (std::size_t i = 1; i < kept.size(); ++i) acc = ideal_intersection(acc, kept[i], lex, options, &st.groebner);
  IdealBasis<Field> out(n, field, acc.certified()->basis);
  out.set_certified(*acc.certified());
  return out;
}

/// f vanishes at `samples_per_stratum` random points of every H_mu, mu in G.
template <class Field>
bool check_vanishing(const Polynomial<Field>& f, const PartitionFilter& g, std::size_t samples_per_stratum,
                     std::uint64_t seed, std::size_t* points_checked = nullptr) {
  std::size_t k = 0;
  for (const auto& mu : g.members()) {
    auto sample = sample_stratum(mu, samples_per_stratum, seed + 7919 * (++k), f.field());
    for (const auto& p : sample.points) {
      if (points_checked) ++*points_checked;
      if (!f.field().is_zero(evaluate(f, p))) return false;
    }
  }
  return true;
}

}  // namespace spechtgb

#endif  // SPECHTGB_STRATA_HPP
