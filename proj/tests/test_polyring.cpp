#include <gtest/gtest.h>

#include "support.hpp"

using namespace spechtgb;
using spechtgb::testing::qpoly;

namespace {

template <class Field>
Polynomial<Field> random_poly(std::size_t n, const Field& field, Rng& rng, int max_terms = 5, int max_deg = 3) {
  std::vector<typename Polynomial<Field>::Term> terms;
  const int count = static_cast<int>(rng.uniform(0, max_terms));
  for (int k = 0; k < count; ++k) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) m.set(v, static_cast<int>(rng.uniform(0, max_deg)));
    terms.push_back({m, field.from_int(static_cast<long>(rng.uniform(-9, 9)))});
  }
  return Polynomial<Field>::from_terms(n, field, std::move(terms));
}

template <class Field>
void ring_axioms(const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 3;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(n, field, rng), b = random_poly(n, field, rng), c = random_poly(n, field, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * Polynomial<Field>::one(n, field), a);
  }
}

template <class Field>
void leading_term_multiplicative(const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 4;
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(n), MonomialOrder::lex({2, 0, 3, 1}),
                                          MonomialOrder::graded_lex({1, 2, 3, 0}), MonomialOrder::graded_revlex(n),
                                          MonomialOrder::weight({3, 1, mpq_class(1, 2), 2}, {3, 2, 1, 0})};
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(n, field, rng), g = random_poly(n, field, rng);
    if (f.is_zero() || g.is_zero()) continue;
    for (const auto& ord : orders) {
      auto [mf, cf] = leading_term(f, ord);
      auto [mg, cg] = leading_term(g, ord);
      auto [mfg, cfg] = leading_term(f * g, ord);
      ASSERT_EQ(mfg, mf * mg) << ord.to_string();
      ASSERT_TRUE(field.equal(cfg, field.mul(cf, cg)));
    }
  }
}

}  // namespace

TEST(Field, Parsing) {
  EXPECT_TRUE(parse_field("Q").is_rationals());
  EXPECT_EQ(parse_field("F7").p, 7u);
  EXPECT_EQ(parse_field("F7").to_string(), "F7");
  EXPECT_THROW(parse_field("F8"), ParseError);
  EXPECT_THROW(parse_field("F1"), ParseError);
  EXPECT_THROW(parse_field("R"), ParseError);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
}

TEST(Field, PrimeArithmetic) {
  PrimeField f7(7);
  EXPECT_EQ(f7.from_int(-1), 6u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f7.mul(a, f7.inv(a)), 1u);
  EXPECT_THROW(f7.inv(0), std::domain_error);
  EXPECT_EQ(f7.from_fraction(1, 2), 4u);
  EXPECT_THROW(f7.from_fraction(1, 7), std::domain_error);
  PrimeField f2(2);
  EXPECT_EQ(f2.neg(1), 1u);
}

TEST(Polynomial, AdditionExamples) {
  auto zero = qpoly("0", 3);
  auto f = qpoly("x1-x2", 3);
  EXPECT_EQ(f + zero, f);
  EXPECT_EQ(f + qpoly("x2-x3", 3), qpoly("x1-x3", 3));
  EXPECT_TRUE((f + qpoly("x2-x1", 3)).is_zero());
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.num_terms(), 0u);
}

TEST(Polynomial, MultiplicationExamples) {
  EXPECT_EQ(qpoly("(x1-x2)*(x1+x2)", 2), qpoly("x1^2-x2^2", 2));
  auto f = qpoly("(x3-x4)*(x3-x6)*(x4-x6)*(x2-x5)", 7);
  EXPECT_EQ(f.num_terms(), 12u);  // 3! terms times 2
  for (const auto& t : f.terms()) EXPECT_TRUE(t.coeff == 1 || t.coeff == -1);
  EXPECT_EQ(f * Polynomial<Rationals>::one(7, Rationals{}), f);
}

TEST(Polynomial, MismatchRejected) {
  auto a = qpoly("x1", 2);
  auto b = qpoly("x1", 3);
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
  auto c = parse_polynomial("x1", 2, PrimeField(5));
  auto d = parse_polynomial("x1", 2, PrimeField(7));
  EXPECT_THROW(c + d, std::invalid_argument);
  EXPECT_THROW(c * d, std::invalid_argument);
}

TEST(Polynomial, RandomRingAxiomsOverQ) { ring_axioms(Rationals{}, 11); }
TEST(Polynomial, RandomRingAxiomsOverF2) { ring_axioms(PrimeField(2), 12); }
TEST(Polynomial, RandomRingAxiomsOverF7) { ring_axioms(PrimeField(7), 13); }

TEST(Polynomial, LeadingTermMultiplicative) {
  leading_term_multiplicative(Rationals{}, 21);
  leading_term_multiplicative(PrimeField(3), 22);
}

TEST(Polynomial, Evaluate) {
  const Rationals q;
  auto f = qpoly("x1-x2", 2);
  EXPECT_TRUE(q.is_zero(evaluate(f, std::vector<mpq_class>{5, 5})));
  EXPECT_EQ(evaluate(qpoly("x1*x2", 2), std::vector<mpq_class>{2, 3}), 6);
  auto ft = qpoly("(x3-x4)*(x3-x6)*(x4-x6)*(x2-x5)", 7);
  EXPECT_TRUE(q.is_zero(evaluate(ft, std::vector<mpq_class>{1, 2, 9, 9, 4, -3, 8})));
  EXPECT_FALSE(q.is_zero(evaluate(ft, std::vector<mpq_class>{1, 2, 3, 4, 5, 6, 7})));
  EXPECT_EQ(evaluate(qpoly("1/2*x1", 1), std::vector<mpq_class>{3}), mpq_class(3, 2));
}

TEST(Polynomial, LeadingTermExamples) {
  auto [m, c] = leading_term(qpoly("x1+x2", 2), MonomialOrder::lex(2));
  EXPECT_EQ(m, (Monomial{0, 1}));
  EXPECT_EQ(c, 1);
  auto ft = qpoly("(x3-x4)*(x3-x6)*(x4-x6)*(x2-x5)", 7);
  EXPECT_EQ(leading_term(ft, MonomialOrder::lex(7)).first, (Monomial{0, 0, 0, 1, 1, 2, 0}));
  auto mono = qpoly("3*x1^2*x3", 3);
  for (const auto& ord : {MonomialOrder::lex(3), MonomialOrder::graded_revlex(3), MonomialOrder::lex({2, 1, 0})})
    EXPECT_EQ(leading_term(mono, ord).first, (Monomial{2, 0, 1}));
  EXPECT_THROW(leading_term(qpoly("0", 2), MonomialOrder::lex(2)), std::domain_error);
}

TEST(MonomialOrder, Kinds) {
  Monomial a{2, 0, 0}, b{0, 1, 1}, c{0, 0, 3};
  // lex x1<x2<x3
  auto lex = MonomialOrder::lex(3);
  EXPECT_TRUE(lex.less(a, b));
  EXPECT_TRUE(lex.less(b, c));
  auto grlex = MonomialOrder::graded_lex(MonomialOrder::identity(3));
  EXPECT_TRUE(grlex.less(a, b));
  EXPECT_TRUE(grlex.less(b, c));
  // grevlex x1<x2<x3: among degree 2, the monomial with less of x1 is larger
  auto grevlex = MonomialOrder::graded_revlex(3);
  EXPECT_TRUE(grevlex.less(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
  EXPECT_TRUE(grevlex.less(Monomial{2, 0, 0}, Monomial{0, 1, 1}));
  auto w = MonomialOrder::weight({5, 1, 1}, MonomialOrder::identity(3));
  EXPECT_TRUE(w.less(c, a));
  EXPECT_THROW(MonomialOrder::weight({1, 0, 1}, MonomialOrder::identity(3)), std::invalid_argument);
  EXPECT_THROW(MonomialOrder::lex({0, 0, 1}), std::invalid_argument);
}

TEST(MonomialOrder, InducedLex) {
  auto w = MonomialOrder::weight({1, 3, 2}, MonomialOrder::identity(3));
  EXPECT_EQ(w.variable_order(), (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(w.induced_lex(), MonomialOrder::lex({0, 2, 1}));
  EXPECT_EQ(MonomialOrder::graded_revlex({2, 0, 1}).induced_lex(), MonomialOrder::lex({2, 0, 1}));
}

TEST(MonomialOrder, ParseAndPrint) {
  auto o = parse_order("lex:3,1,2", 3);
  EXPECT_EQ(o, MonomialOrder::lex({2, 0, 1}));
  EXPECT_EQ(o.to_string(), "lex:3,1,2");
  EXPECT_EQ(parse_order("grevlex", 3), MonomialOrder::graded_revlex(3));
  auto w = parse_order("weight:1,1/2,3:lex:2,3,1", 3);
  EXPECT_EQ(w.kind(), MonomialOrder::Kind::weight);
  EXPECT_EQ(parse_order(w.to_string(), 3), w);
  EXPECT_THROW(parse_order("lex:1,2", 3), ParseError);
  EXPECT_THROW(parse_order("lex:1,2,4", 3), ParseError);
  EXPECT_THROW(parse_order("lex:1,1,2", 3), ParseError);
  EXPECT_THROW(parse_order("weight:1,0,1", 3), ParseError);
  EXPECT_THROW(parse_order("deglex", 3), ParseError);
}

TEST(Parser, Literals) {
  const Rationals q;
  auto f = qpoly("x1^2*x2 - 3/2*x3", 3);
  EXPECT_EQ(f.num_terms(), 2u);
  EXPECT_EQ(f.coefficient(Monomial{2, 1, 0}), 1);
  EXPECT_EQ(f.coefficient(Monomial{0, 0, 1}), mpq_class(-3, 2));
  EXPECT_TRUE(qpoly("0", 4).is_zero());
  EXPECT_EQ(qpoly("-(x1 - 2)^2", 1), qpoly("-x1^2 + 4*x1 - 4", 1));
  EXPECT_EQ(qpoly(" 6/4 ", 1), Polynomial<Rationals>::constant(1, q, mpq_class(3, 2)));
}

TEST(Parser, PrintsInOrder) {
  auto f = qpoly("(x1-x2)*(x1-x3)", 3);
  EXPECT_EQ(f.num_terms(), 4u);
  auto lex = MonomialOrder::lex(3);
  auto s = print_polynomial(f, lex);
  EXPECT_EQ(s, "x2*x3 - x1*x3 - x1*x2 + x1^2");
  auto first = print_polynomial(Polynomial<Rationals>::term(Rationals{}, leading_term(f, lex).first, 1), lex);
  EXPECT_EQ(s.rfind(first, 0), 0u);
  EXPECT_EQ(print_polynomial(qpoly("x1^2*x2 - 3/2*x3", 3), MonomialOrder::lex({2, 1, 0})), "x1^2*x2 - 3/2*x3");
  EXPECT_EQ(print_polynomial(qpoly("0", 2), lex), "0");
}

TEST(Parser, RoundTrip) {
  Rng rng(5);
  const Rationals q;
  const PrimeField f5(5);
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(4), MonomialOrder::graded_revlex({3, 1, 0, 2}),
                                          MonomialOrder::weight({1, 2, 3, mpq_class(1, 3)}, {0, 1, 2, 3})};
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(4, q, rng).scaled(mpq_class(1, 1 + trial % 4));
    auto g = random_poly(4, f5, rng);
    for (const auto& ord : orders) {
      ASSERT_EQ(parse_polynomial(print_polynomial(f, ord), 4, q), f);
      ASSERT_EQ(parse_polynomial(print_polynomial(g, ord), 4, f5), g);
    }
  }
}

TEST(Parser, Errors) {
  const Rationals q;
  try {
    parse_polynomial("x1 + * x2", 2, q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_polynomial("x3", 2, q), ParseError);
  EXPECT_THROW(parse_polynomial("x0", 2, q), ParseError);
  EXPECT_THROW(parse_polynomial("(x1", 2, q), ParseError);
  EXPECT_THROW(parse_polynomial("1/0", 2, q), ParseError);
  EXPECT_THROW(parse_polynomial("x1 x2", 2, q), ParseError);
  EXPECT_THROW(parse_polynomial("", 2, q), ParseError);
}

TEST(Polynomial, CoefficientsInLastVariable) {
  auto c = coefficients_in_last_variable(qpoly("x3^2 + x1", 3));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], qpoly("x1", 2));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], qpoly("1", 2));
  auto no_last = coefficients_in_last_variable(qpoly("x1*x2 + 3", 3));
  ASSERT_EQ(no_last.size(), 1u);
  EXPECT_EQ(no_last[0], qpoly("x1*x2 + 3", 2));
  auto e = coefficients_in_last_variable(qpoly("(x1-x3)*(x2-x3)", 3));
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], qpoly("x1*x2", 2));
  EXPECT_EQ(e[1], qpoly("-x1-x2", 2));
  EXPECT_EQ(e[2], qpoly("1", 2));
  EXPECT_THROW(coefficients_in_last_variable(qpoly("0", 3)), std::domain_error);
}

TEST(Polynomial, CoefficientsReconstruct) {
  Rng rng(8);
  const Rationals q;
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(3, q, rng, 6, 4);
    if (f.is_zero()) continue;
    auto g = coefficients_in_last_variable(f);
    ASSERT_FALSE(g.back().is_zero());
    ASSERT_EQ(static_cast<int>(g.size()) - 1, f.degree_in(2));
    Polynomial<Rationals> sum(3, q);
    auto x3 = Polynomial<Rationals>::variable(3, q, 2);
    for (std::size_t k = 0; k < g.size(); ++k) sum += g[k].widened(1) * x3.pow(static_cast<unsigned>(k));
    ASSERT_EQ(sum, f);
  }
}

TEST(Polynomial, ProductsOfLinearFormsFollowInducedLex) {
  const Rationals q;
  for (int n = 2; n <= 6; ++n) {
    auto orders = random_orders(static_cast<std::size_t>(n), 12, 100 + n);
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& t : enumerate_tableaux(lambda, TableauMode::column_standard)) {
        auto f = specht_polynomial(t, q);
        for (const auto& ord : orders) ASSERT_EQ(leading_term(f, ord).first, leading_term(f, ord.induced_lex()).first);
      }
  }
}
