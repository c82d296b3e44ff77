#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace spechtgb;
using spechtgb::testing::lower_of;
using spechtgb::testing::qpoly;
using spechtgb::testing::qpolys;

namespace {

const Rationals kQ;
using QIdeal = IdealBasis<Rationals>;

PartitionFilter upper(int n, std::vector<Partition> members) { return PartitionFilter(n, std::move(members), FilterKind::upper); }

}  // namespace

TEST(Sampling, PointsHaveTheRequestedOrbitType) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      auto s = sample_stratum(mu, 10, 99, kQ);
      ASSERT_EQ(s.points.size(), 10u);
      for (const auto& p : s.points) {
        ASSERT_EQ(orbit_type(p), mu);
        for (const auto& v : p) {
          ASSERT_EQ(v.get_den(), 1);
          ASSERT_LE(abs(v), 1000);
        }
      }
    }
}

TEST(Sampling, Examples) {
  for (const auto& p : sample_stratum(Partition{4}, 5, 1, kQ).points)
    EXPECT_TRUE(p[0] == p[1] && p[1] == p[2] && p[2] == p[3]);
  for (const auto& p : sample_stratum(Partition{1, 1, 1, 1}, 5, 1, kQ).points)
    EXPECT_EQ(std::set<mpq_class>(p.begin(), p.end()).size(), 4u);
  auto s = sample_stratum(Partition{3, 2, 1}, 3, 7, kQ);
  for (const auto& p : s.points) EXPECT_EQ(orbit_type(p), (Partition{3, 2, 1}));
}

TEST(Sampling, DeterministicPerSeed) {
  auto a = sample_stratum(Partition{2, 2, 1}, 4, 5, kQ);
  auto b = sample_stratum(Partition{2, 2, 1}, 4, 5, kQ);
  auto c = sample_stratum(Partition{2, 2, 1}, 4, 6, kQ);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, c.points);
}

TEST(Sampling, PrimeFields) {
  const PrimeField f3(3);
  for (const auto& p : sample_stratum(Partition{2, 1, 1}, 5, 2, f3).points) EXPECT_EQ(orbit_type(p), (Partition{2, 1, 1}));
  EXPECT_THROW(sample_stratum(Partition{1, 1, 1}, 1, 2, PrimeField(2)), UnsupportedField);
}

TEST(SubspaceIdeal, Examples) {
  EXPECT_TRUE(subspace_ideal(SetPartition(3, {{1}, {2}, {3}}), kQ).is_zero_ideal());
  EXPECT_EQ(subspace_ideal(SetPartition(3, {{1, 2, 3}}), kQ).generators(), qpolys({"x1-x2", "x2-x3"}, 3));
  EXPECT_EQ(subspace_ideal(SetPartition(3, {{1, 2}, {3}}), kQ).generators(), qpolys({"x1-x2"}, 3));
}

TEST(Oracle, Examples) {
  const auto lex3 = MonomialOrder::lex(3);
  auto j = vanishing_ideal_oracle(upper(3, {Partition{3}, Partition{2, 1}}), kQ);
  EXPECT_TRUE(ideal_equal(j, QIdeal(3, kQ, qpolys({"(x1-x2)*(x1-x3)*(x2-x3)"}, 3)), lex3));
  ASSERT_TRUE(j.certified().has_value());
  EXPECT_EQ(j.certified()->order, lex3);

  OracleStats st;
  vanishing_ideal_oracle(upper(3, {Partition{3}, Partition{2, 1}}), kQ, {}, &st);
  EXPECT_EQ(st.subspaces, 4u);
  EXPECT_EQ(st.absorbed, 1u);

  EXPECT_TRUE(vanishing_ideal_oracle(PartitionFilter(3, enumerate_partitions(3), FilterKind::upper), kQ).is_zero_ideal());
  auto d = vanishing_ideal_oracle(upper(2, {Partition{2}}), kQ);
  EXPECT_TRUE(ideal_equal(d, QIdeal(2, kQ, qpolys({"x1-x2"}, 2)), MonomialOrder::lex(2)));
}

TEST(Oracle, Errors) {
  EXPECT_THROW(vanishing_ideal_oracle(upper(3, {}), kQ), std::invalid_argument);
  EXPECT_THROW(vanishing_ideal_oracle(lower_of(Partition{2, 1}), kQ), std::invalid_argument);
  EXPECT_THROW(vanishing_ideal_oracle(upper(2, {Partition{2}}), PrimeField(5)), UnsupportedField);
}

TEST(Oracle, GeneratorsVanishOnStrata) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_upper_filters(n)) {
      auto j = vanishing_ideal_oracle(g, kQ);
      for (const auto& f : j.generators()) ASSERT_TRUE(check_vanishing(f, g, 25, 3)) << g.to_string();
    }
}

TEST(Oracle, Monotone) {
  const auto lex = MonomialOrder::lex(4);
  auto ups = enumerate_upper_filters(4);
  for (const auto& g : ups)
    for (const auto& h : ups) {
      bool subset = std::all_of(g.members().begin(), g.members().end(), [&](const auto& m) { return h.contains(m); });
      if (!subset) continue;
      auto jg = vanishing_ideal_oracle(g, kQ);
      auto jh = vanishing_ideal_oracle(h, kQ);
      for (const auto& f : jh.generators()) ASSERT_TRUE(ideal_membership(f, jg, lex));
    }
}

TEST(Oracle, Radical) {
  Rng rng(12);
  for (int n = 2; n <= 4; ++n) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    for (const auto& g : enumerate_upper_filters(n)) {
      auto j = vanishing_ideal_oracle(g, kQ);
      if (j.is_zero_ideal()) continue;
      const auto& gb = j.certified()->basis;
      for (int trial = 0; trial < 10; ++trial) {
        auto f = detail::random_polynomial(static_cast<std::size_t>(n), 2, 3, rng);
        ASSERT_EQ(member_of_gb(f.pow(2), gb, lex), member_of_gb(f, gb, lex));
        // a member plus a random perturbation
        auto h = f * gb[rng.index(gb.size())] + detail::random_polynomial(static_cast<std::size_t>(n), 1, 2, rng);
        ASSERT_EQ(member_of_gb(h.pow(2), gb, lex), member_of_gb(h, gb, lex));
      }
    }
  }
}

TEST(Oracle, LowDegreeInterpolantsAreMembers) {
  // polynomials of degree <= 3 in 3 variables vanishing on all sampled
  // strata points must lie in the oracle ideal
  const std::size_t n = 3;
  const auto lex = MonomialOrder::lex(n);
  std::vector<Monomial> basis;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) basis.push_back(Monomial{a, b, c});
  for (const auto& g : enumerate_upper_filters(3)) {
    auto j = vanishing_ideal_oracle(g, kQ);
    std::vector<std::vector<mpq_class>> points;
    std::uint64_t k = 0;
    for (const auto& mu : g.members())
      for (auto& p : sample_stratum(mu, 60, 500 + (++k), kQ).points) points.push_back(p);
    // kernel of the evaluation matrix by elimination on columns
    std::vector<Polynomial<Rationals>> candidates;
    for (const auto& m : basis) candidates.push_back(Polynomial<Rationals>::term(kQ, m, 1));
    for (const auto& p : points) {
      std::vector<mpq_class> vals;
      for (const auto& c : candidates) vals.push_back(evaluate(c, p));
      std::size_t pivot = 0;
      while (pivot < vals.size() && vals[pivot] == 0) ++pivot;
      if (pivot == vals.size()) continue;
      std::vector<Polynomial<Rationals>> next;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (i != pivot) next.push_back(candidates[i] - candidates[pivot].scaled(vals[i] / vals[pivot]));
      candidates = std::move(next);
    }
    for (const auto& f : candidates) {
      if (j.is_zero_ideal()) {
        ASSERT_TRUE(f.is_zero()) << g.to_string();
      } else {
        ASSERT_TRUE(member_of_gb(f, j.certified()->basis, lex)) << g.to_string() << " " << to_string(f);
      }
    }
  }
}

TEST(CheckVanishing, Examples) {
  for (const auto& lambda : enumerate_partitions(4)) {
    auto g = lower_of(lambda).complement();
    if (g.empty()) continue;
    for (const auto& t : enumerate_tableaux(lambda, TableauMode::column_standard))
      EXPECT_TRUE(check_vanishing(specht_polynomial(t, kQ), g, 10, 1));
  }
  auto g = upper(3, {Partition{3}});
  EXPECT_FALSE(check_vanishing(qpoly("1", 3), g, 3, 1));
  EXPECT_TRUE(check_vanishing(qpoly("0", 3), g, 3, 1));
  std::size_t points = 0;
  check_vanishing(qpoly("x1-x2", 3), upper(3, {Partition{3}, Partition{2, 1}}), 4, 1, &points);
  EXPECT_GT(points, 0u);
}

TEST(SpechtVsOracle, EqualUpToFive) {
  for (int n = 2; n <= 5; ++n) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    for (const auto& f : enumerate_lower_filters(n)) {
      auto g = f.complement();
      QIdeal specht(static_cast<std::size_t>(n), kQ,
                    polynomials_of(specht_generators(f, GeneratorMode::column_standard, kQ)));
      QIdeal oracle = g.empty() ? QIdeal::unit(static_cast<std::size_t>(n), kQ) : vanishing_ideal_oracle(g, kQ);
      ASSERT_TRUE(ideal_equal(specht, oracle, lex)) << f.to_string();
    }
  }
}

TEST(Lemma33, DerivedFilterProperty) {
  for (int n = 3; n <= 4; ++n) {
    auto r = check_lemma33(n, 10, 5);
    EXPECT_TRUE(r.passed()) << r.reason;
    EXPECT_GT(r.evidence.trials, 0u);
  }
}

TEST(Lemma33, NoXnDependence) {
  // deg_{x_n} f = 0 reduces the statement to f in J of F'_1
  auto g = upper(3, {Partition{3}});
  auto j = vanishing_ideal_oracle(g, kQ);
  auto f = qpoly("x1-x2", 3);
  ASSERT_TRUE(ideal_membership(f, j, MonomialOrder::lex(3)));
  auto coeffs = coefficients_in_last_variable(f);
  ASSERT_EQ(coeffs.size(), 1u);
  auto g1 = derived_filter(g, 1);
  EXPECT_EQ(g1.to_string(), "{2}");
  EXPECT_TRUE(ideal_membership(coeffs[0], vanishing_ideal_oracle(g1, kQ), MonomialOrder::lex(2)));
}
