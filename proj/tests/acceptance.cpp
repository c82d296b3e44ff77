// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace spechtgb;
using spechtgb::testing::count_standard_by_corners;
using spechtgb::testing::hook_length_count;

namespace {

constexpr std::uint64_t kSeed = 7;
const Rationals kQ;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const CheckReport& r) {
    require(r.verdict == Verdict::pass, r.check_id + " " + r.parameters.dump() + ": " + r.reason);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Outcome&)> body;
};

bool run(const Criterion& c) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs > c.limit_s) {
    out.ok = false;
    out.detail = "exceeded the time limit";
  }
  std::printf("%s  criterion %2d  %-44s %6zu checks  %8.2f s (limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id,
              c.name.c_str(), out.checks, secs, c.limit_s, out.ok ? "" : "  -- ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

std::vector<Polynomial<Rationals>> random_generators(Rng& rng) {
  std::vector<Polynomial<Rationals>> gens;
  const int count = static_cast<int>(rng.uniform(2, 4));
  for (int k = 0; k < count; ++k) {
    auto f = detail::random_polynomial(3, 3, 3, rng);
    if (!f.is_zero()) gens.push_back(f);
  }
  return gens;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "lex Groebner basis, every lower filter n<=5", 120,
       [](Outcome& o) {
         for (int n = 2; n <= 5; ++n)
           for (const auto& f : enumerate_lower_filters(n)) o.absorb(check_lexgb(f, kQ));
       }},
      {2, "universal GB, all lex + 25 random orders n<=4", 300,
       [](Outcome& o) {
         for (int n = 2; n <= 4; ++n)
           for (const auto& f : enumerate_lower_filters(n)) {
             auto r = check_universal(f, 25, kSeed, kQ);
             o.absorb(r);
             std::uint64_t lex = 1;
             for (int k = 2; k <= n; ++k) lex *= static_cast<std::uint64_t>(k);
             o.require(r.evidence.orders_tested == lex + 25, "wrong number of tested orders");
           }
       }},
      {3, "Specht ideal equals oracle, every lower filter n<=5", 600,
       [](Outcome& o) {
         for (int n = 2; n <= 5; ++n)
           for (const auto& f : enumerate_lower_filters(n)) o.absorb(check_reduced(f));
       }},
      {4, "anchor case n=3, F={111}", 1,
       [](Outcome& o) {
         const auto lex = MonomialOrder::lex(3);
         PartitionFilter f(3, {Partition{1, 1, 1}}, FilterKind::lower);
         auto expected = buchberger(std::vector{parse_polynomial("(x1-x2)*(x1-x3)*(x2-x3)", 3, kQ)}, lex);
         auto specht = buchberger(polynomials_of(specht_generators(f, GeneratorMode::column_standard, kQ)), lex);
         auto oracle = groebner_basis(vanishing_ideal_oracle(f.complement(), kQ), lex);
         o.require(specht == expected, "Specht side differs from the Vandermonde");
         o.require(oracle == expected, "oracle side differs from the Vandermonde");
         o.absorb(check_reduced(f));
       }},
      {5, "vanishing on non-dominated strata n<=6", 180,
       [](Outcome& o) {
         for (int n = 2; n <= 6; ++n) o.absorb(check_lemma21(n, 10, kSeed));
         auto control = lemma21_negative_control(Partition{2, 1}, Partition{1, 1, 1}, kSeed);
         o.require(control.verdict == Verdict::fail, "negative control did not produce a nonzero evaluation");
       }},
      {6, "x_n-coefficients in derived-filter oracle n=3..5", 600,
       [](Outcome& o) {
         for (int n = 3; n <= 5; ++n) {
           auto r = check_lemma33(n, 20, kSeed);
           o.absorb(r);
           o.require(r.evidence.trials > 0, "no trials ran");
         }
       }},
      {7, "containment I_mu in I_lambda for mu below lambda n<=6", 300,
       [](Outcome& o) {
         for (int n = 2; n <= 6; ++n) o.absorb(check_containment(n, kQ));
       }},
      {8, "rank of Specht span equals hook-length count n<=6", 120,
       [](Outcome& o) {
         for (int n = 1; n <= 6; ++n)
           for (const auto& lambda : enumerate_partitions(n)) {
             auto r = standard_span_rank(lambda);
             const auto hooks = hook_length_count(lambda);
             o.require(hooks == count_standard_by_corners(lambda.parts()), "hook-length oracles disagree");
             o.require(r.rank == hooks, "rank differs from hook-length count for " + lambda.to_string());
             o.require(r.standard_count == hooks, "standard tableau count differs for " + lambda.to_string());
             o.require(r.spanned_by_standard, "standard polynomials do not span for " + lambda.to_string());
           }
       }},
      {9, "restricted standard set, every shape n<=5", 300,
       [](Outcome& o) {
         for (int n = 1; n <= 5; ++n)
           for (const auto& lambda : enumerate_partitions(n)) o.absorb(check_remark35(lambda, kQ));
       }},
      {10, "criteria 1-2 over F_p and mod-p images n<=4", 180,
       [](Outcome& o) {
         for (std::uint32_t p : {2u, 3u, 7u})
           for (int n = 2; n <= 4; ++n)
             for (const auto& f : enumerate_lower_filters(n)) {
               o.absorb(check_finite_field(f, p, 25, kSeed));
               const PrimeField fp(p);
               o.absorb(check_lexgb(f, fp));
             }
       }},
      {11, "reduced GB independent of input order and chain criterion", 120,
       [](Outcome& o) {
         Rng rng(kSeed);
         BuchbergerOptions no_chain;
         no_chain.chain_criterion = false;
         for (int trial = 0; trial < 100; ++trial) {
           std::vector<Polynomial<Rationals>> gens;
           std::size_t n = 3;
           if (trial % 2 == 0) {
             n = 3 + rng.index(2);
             auto filters = enumerate_lower_filters(static_cast<int>(n));
             gens = polynomials_of(
                 specht_generators(filters[rng.index(filters.size())], GeneratorMode::column_standard, kQ));
           } else {
             gens = random_generators(rng);
             if (gens.empty()) gens.push_back(Polynomial<Rationals>::variable(3, kQ, 0));
           }
           auto orders = random_orders(n, 1, rng.next());
           const auto ord = trial % 3 == 0 ? MonomialOrder::lex(n) : orders.front();
           auto reference = buchberger(gens, ord);
           auto shuffled = gens;
           rng.shuffle(shuffled);
           o.require(buchberger(shuffled, ord) == reference, "input permutation changed the GB under " + ord.to_string());
           o.require(buchberger(gens, ord, no_chain) == reference, "chain criterion changed the GB under " + ord.to_string());
           o.require(buchberger(shuffled, ord, no_chain) == reference, "permuted run without chain criterion differs");
           o.require(is_groebner_basis(reference, ord).is_groebner, "output is not a Groebner basis");
         }
       }},
  };
  return all;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria())
    if (!run(c)) ++failed;
  std::printf("%zu criteria, %d failed\n", criteria().size(), failed);
  return failed == 0 ? 0 : 1;
}
