#ifndef SPECHTGB_VERIFY_HPP
#define SPECHTGB_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "combinatorics.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "parse.hpp"
#include "specht.hpp"
#include "strata.hpp"

namespace spechtgb {

inline constexpr const char* kReportSchema = "spechtgb.report/1";

enum class Verdict { pass, fail, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct Evidence {
  std::uint64_t spairs_reduced = 0;
  std::uint64_t memberships_tested = 0;
  std::uint64_t points_sampled = 0;
  std::uint64_t orders_tested = 0;
  std::uint64_t generators = 0;
  std::uint64_t trials = 0;
};

/// Outcome of one named check.
struct CheckReport {
  std::string check_id;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  std::string reason;
  Evidence evidence;
  double timing_ms = 0;

  void fail(std::string why) {
    if (verdict != Verdict::fail) reason = std::move(why);
    verdict = Verdict::fail;
  }
  bool passed() const { return verdict == Verdict::pass; }

  nlohmann::json to_json(bool include_timing = true) const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["check_id"] = check_id;
    j["parameters"] = parameters;
    j["verdict"] = to_string(verdict);
    if (!reason.empty()) j["reason"] = reason;
    j["evidence"] = {{"spairs_reduced", evidence.spairs_reduced},
                     {"memberships_tested", evidence.memberships_tested},
                     {"points_sampled", evidence.points_sampled},
                     {"orders_tested", evidence.orders_tested},
                     {"generators", evidence.generators},
                     {"trials", evidence.trials}};
    if (include_timing) j["timing_ms"] = timing_ms;
    return j;
  }

  /// Key for canonical report ordering.
  std::string sort_key() const { return check_id + '\x1f' + parameters.dump(); }
};

namespace detail {

template <class Fn>
CheckReport timed(std::string id, nlohmann::json params, Fn&& body) {
  CheckReport r;
  r.check_id = std::move(id);
  r.parameters = std::move(params);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string lex_name(int n) { return MonomialOrder::lex(static_cast<std::size_t>(n)).to_string(); }

inline nlohmann::json params(int n, const std::string& filter, const std::string& order, const FieldSpec& field,
                             std::uint64_t seed, const std::string& mode) {
  return {{"n", n}, {"filter", filter}, {"order", order}, {"field", field.to_string()}, {"seed", seed}, {"mode", mode}};
}

inline PartitionFilter principal_lower(const Partition& lambda) {
  return filter_closure(lambda.n(), {lambda}, FilterKind::lower);
}

}  // namespace detail

/// Random monomial orders cycling through graded lex, graded revlex and
/// positive weight orders, each with a random variable ranking.
inline std::vector<MonomialOrder> random_orders(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MonomialOrder> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto ranking = MonomialOrder::identity(n);
    rng.shuffle(ranking);
    switch (k % 3) {
      case 0: out.push_back(MonomialOrder::graded_lex(ranking)); break;
      case 1: out.push_back(MonomialOrder::graded_revlex(ranking)); break;
      default: {
        std::vector<mpq_class> w;
        for (std::size_t i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, 20), rng.uniform(1, 5));
        out.push_back(MonomialOrder::weight(std::move(w), ranking));
      }
    }
  }
  return out;
}

/// All n! lex orders, in lexicographic order of their rankings.
inline std::vector<MonomialOrder> all_lex_orders(std::size_t n) {
  std::vector<MonomialOrder> out;
  auto ranking = MonomialOrder::identity(n);
  do out.push_back(MonomialOrder::lex(ranking));
  while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

/// Image of a rational polynomial in F_p; throws if a denominator vanishes.
inline Polynomial<PrimeField> reduce_mod_p(const Polynomial<Rationals>& f, const PrimeField& fp) {
  std::vector<Polynomial<PrimeField>::Term> terms;
  for (const auto& t : f.terms())
    terms.push_back({t.monomial, fp.from_fraction(t.coeff.get_num(), t.coeff.get_den())});
  return Polynomial<PrimeField>::from_terms(f.n(), fp, std::move(terms));
}

// ---------------------------------------------------------------------------
// Individual checks. Each `*_with` variant takes the generator set under
// test explicitly; negative controls feed corrupted sets through it.

/// G is a lex (x1<...<xn) Gröbner basis and the all-tableaux generator set
/// of `filter` gives the same reduced basis.
template <class Field>
CheckReport check_lexgb_with(const PartitionFilter& filter, const std::vector<Polynomial<Field>>& gens,
                             const Field& field, const std::string& mode = "column_standard") {
  const int n = filter.n();
  return detail::timed("lexgb", detail::params(n, filter.to_string(), detail::lex_name(n), field.spec(), 0, mode),
                       [&](CheckReport& r) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    r.evidence.generators = gens.size();
    auto cert = is_groebner_basis(gens, lex, {}, false);
    r.evidence.spairs_reduced += cert.reductions;
    if (!cert.is_groebner) r.fail("an S-polynomial has a nonzero remainder under " + lex.to_string());
    GroebnerStats st;
    auto gb = buchberger(gens, lex, {}, &st);
    auto all = polynomials_of(specht_generators(filter, GeneratorMode::all_tableaux, field));
    auto gb_all = buchberger(all, lex, {}, &st);
    r.evidence.spairs_reduced += st.reductions;
    if (gb != gb_all) r.fail("reduced GB differs between the tested set and the all-tableaux set");
    r.evidence.orders_tested = 1;
  });
}

template <class Field>
CheckReport check_lexgb(const PartitionFilter& filter, const Field& field) {
  return check_lexgb_with(filter, polynomials_of(specht_generators(filter, GeneratorMode::column_standard, field)),
                          field);
}

/// G is a Gröbner basis for every lex order and `order_budget` random
/// orders, and each generator's leading monomial agrees with the induced
/// lex order's.
template <class Field>
CheckReport check_universal_with(const PartitionFilter& filter, const std::vector<Polynomial<Field>>& gens,
                                 std::size_t order_budget, std::uint64_t seed, const Field& field) {
  const int n = filter.n();
  auto p = detail::params(n, filter.to_string(), "all-lex+random", field.spec(), seed, "column_standard");
  p["order_budget"] = order_budget;
  return detail::timed("universal", std::move(p), [&](CheckReport& r) {
    r.evidence.generators = gens.size();
    auto orders = all_lex_orders(static_cast<std::size_t>(n));
    auto extra = random_orders(static_cast<std::size_t>(n), order_budget, seed);
    orders.insert(orders.end(), extra.begin(), extra.end());
    for (const auto& ord : orders) {
      ++r.evidence.orders_tested;
      auto cert = is_groebner_basis(gens, ord, {}, false);
      r.evidence.spairs_reduced += cert.reductions;
      if (!cert.is_groebner) {
        r.fail("not a Gröbner basis under " + ord.to_string());
        return;
      }
      const auto induced = ord.induced_lex();
      for (const auto& f : gens)
        if (leading_term(f, ord).first != leading_term(f, induced).first) {
          r.fail("leading monomial under " + ord.to_string() + " differs from induced " + induced.to_string());
          return;
        }
    }
  });
}

template <class Field>
CheckReport check_universal(const PartitionFilter& filter, std::size_t order_budget, std::uint64_t seed,
                            const Field& field) {
  return check_universal_with(
      filter, polynomials_of(specht_generators(filter, GeneratorMode::column_standard, field)), order_budget, seed,
      field);
}

/// <G> equals the intersection-of-primes oracle for the complement of the
/// filter (two-sided membership under lex).
inline CheckReport check_reduced_with(const PartitionFilter& filter, const std::vector<Polynomial<Rationals>>& gens) {
  const int n = filter.n();
  const Rationals q;
  return detail::timed("reduced", detail::params(n, filter.to_string(), detail::lex_name(n), q.spec(), 0, "column_standard"),
                       [&](CheckReport& r) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    IdealBasis<Rationals> specht(static_cast<std::size_t>(n), q, gens);
    auto complement = filter.complement();
    OracleStats st;
    // J of the empty set is the whole ring.
    auto oracle = complement.empty() ? IdealBasis<Rationals>::unit(static_cast<std::size_t>(n), q)
                                     : vanishing_ideal_oracle(complement, q, {}, &st);
    GroebnerStats gs;
    specht = with_groebner_basis(std::move(specht), lex, {}, &gs);
    r.evidence.spairs_reduced = st.groebner.reductions + gs.reductions;
    r.evidence.generators = gens.size();
    r.evidence.memberships_tested = specht.generators().size() + oracle.generators().size();
    if (!ideal_equal(specht, oracle, lex)) r.fail("Specht ideal differs from the vanishing-ideal oracle");
  });
}

inline CheckReport check_reduced(const PartitionFilter& filter) {
  const Rationals q;
  return check_reduced_with(filter, polynomials_of(specht_generators(filter, GeneratorMode::column_standard, q)));
}

inline CheckReport skipped_report(std::string id, nlohmann::json params, std::string reason) {
  CheckReport r;
  r.check_id = std::move(id);
  r.parameters = std::move(params);
  r.verdict = Verdict::skipped;
  r.reason = std::move(reason);
  return r;
}

/// f_T vanishes on sampled points of every H_mu with mu not dominated by
/// the shape of T, for all column-standard T.
inline CheckReport check_lemma21(int n, std::size_t samples, std::uint64_t seed) {
  const Rationals q;
  auto p = detail::params(n, "all", "", q.spec(), seed, "column_standard");
  p["samples"] = samples;
  return detail::timed("lemma21", std::move(p), [&](CheckReport& r) {
    auto shapes = enumerate_partitions(n);
    std::map<Partition, StratumSample<Rationals>> strata;
    std::uint64_t k = 0;
    for (const auto& mu : shapes) strata.emplace(mu, sample_stratum(mu, samples, seed + 7919 * (++k), q));
    for (const auto& lambda : shapes) {
      auto tabs = enumerate_tableaux(lambda, TableauMode::column_standard);
      for (const auto& t : tabs) {
        auto f = specht_polynomial(t, q);
        ++r.evidence.generators;
        for (const auto& mu : shapes) {
          if (dominates(lambda, mu)) continue;
          for (const auto& pt : strata.at(mu).points) {
            ++r.evidence.points_sampled;
            if (!q.is_zero(evaluate(f, pt))) {
              r.fail("f_T for T=" + t.to_string() + " is nonzero on H_" + mu.to_string());
              return;
            }
          }
        }
      }
    }
  });
}

/// Negative control: f_T of shape lambda evaluated at a generic point of
/// H_mu for a dominated mu must be nonzero. Fails when that holds.
inline CheckReport lemma21_negative_control(const Partition& lambda, const Partition& mu, std::uint64_t seed) {
  const Rationals q;
  auto p = detail::params(lambda.n(), lambda.to_string() + " vs " + mu.to_string(), "", q.spec(), seed, "negative_control");
  return detail::timed("lemma21:negative_control", std::move(p), [&](CheckReport& r) {
    auto sample = sample_stratum(mu, 1, seed, q);
    auto t = enumerate_tableaux(lambda, TableauMode::standard).front();
    ++r.evidence.points_sampled;
    if (!q.is_zero(evaluate(specht_polynomial(t, q), sample.points.front())))
      r.fail("f_T is nonzero on H_" + mu.to_string());
  });
}

namespace detail {

/// Oracles by filter, with the conventions J_{} = S and J_G = 0 when
/// (1^n) is in G.
class OracleCache {
public:
  const IdealBasis<Rationals>& get(const PartitionFilter& g, GroebnerStats& st) {
    auto key = std::to_string(g.n()) + g.to_string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Rationals q;
    const std::size_t n = static_cast<std::size_t>(g.n());
    OracleStats os;
    IdealBasis<Rationals> ideal = g.empty() ? with_groebner_basis(IdealBasis<Rationals>::unit(n, q), MonomialOrder::lex(n))
                                            : vanishing_ideal_oracle(g, q, {}, &os);
    st += os.groebner;
    return cache_.emplace(key, std::move(ideal)).first->second;
  }

private:
  std::map<std::string, IdealBasis<Rationals>> cache_;
};

inline Polynomial<Rationals> random_polynomial(std::size_t n, int max_degree, int max_terms, Rng& rng) {
  const Rationals q;
  std::vector<Polynomial<Rationals>::Term> terms;
  int count = static_cast<int>(rng.uniform(0, max_terms));
  for (int k = 0; k < count; ++k) {
    Monomial m(n);
    int budget = static_cast<int>(rng.uniform(0, max_degree));
    for (int e = 0; e < budget; ++e) {
      std::size_t v = rng.index(n);
      m.set(v, m[v] + 1);
    }
    long c = static_cast<long>(rng.uniform(-3, 3));
    terms.push_back({m, q.from_int(c)});
  }
  return Polynomial<Rationals>::from_terms(n, q, std::move(terms));
}

}  // namespace detail

/// For every upper filter F' of P_n and random nonzero f in J_{F'}, the
/// x_n-coefficients of f lie in J_{F'_{d+1}}, d = deg_{x_n} f.
///
/// With `skip_prefilter` the candidate f are arbitrary random polynomials
/// and the membership prefilter is bypassed, which makes a discriminating
/// negative control.
inline CheckReport check_lemma33(int n, std::size_t trials, std::uint64_t seed, bool skip_prefilter = false) {
  const Rationals q;
  auto p = detail::params(n, "all-upper", detail::lex_name(n), q.spec(), seed,
                          skip_prefilter ? "negative_control" : "oracle_members");
  p["trials"] = trials;
  return detail::timed(skip_prefilter ? "lemma33:negative_control" : "lemma33", std::move(p), [&](CheckReport& r) {
    if (n < 2) throw std::invalid_argument("lemma33 needs n >= 2");
    const std::size_t nn = static_cast<std::size_t>(n);
    const auto lex = MonomialOrder::lex(nn);
    const auto lex_lower = MonomialOrder::lex(nn - 1);
    detail::OracleCache cache;
    GroebnerStats st;
    Rng rng(seed);
    for (const auto& upper : enumerate_upper_filters(n)) {
      const auto& oracle = cache.get(upper, st);
      if (oracle.is_zero_ideal()) continue;  // only f = 0 qualifies
      const auto& gb = oracle.certified()->basis;
      for (std::size_t trial = 0; trial < trials; ++trial) {
        Polynomial<Rationals> f(nn, q);
        for (int attempt = 0; attempt < 100 && f.is_zero(); ++attempt) {
          if (skip_prefilter) {
            f = detail::random_polynomial(nn, 3, 4, rng);
          } else {
            for (const auto& g : gb) f += detail::random_polynomial(nn, 2, 3, rng) * g;
          }
        }
        if (f.is_zero()) continue;
        ++r.evidence.memberships_tested;
        if (!skip_prefilter && !member_of_gb(f, gb, lex)) {
          r.fail("constructed polynomial is not in the oracle ideal");
          return;
        }
        ++r.evidence.trials;
        auto coeffs = coefficients_in_last_variable(f);
        const int d = static_cast<int>(coeffs.size()) - 1;
        auto target = derived_filter(upper, d + 1);
        const auto& lower_oracle = cache.get(target, st);
        for (const auto& gk : coeffs) {
          ++r.evidence.memberships_tested;
          bool in = lower_oracle.is_zero_ideal() ? gk.is_zero() : member_of_gb(gk, lower_oracle.certified()->basis, lex_lower);
          if (!in) {
            r.fail("coefficient of x_n^k not in J of " + target.to_string() + " for F'=" + upper.to_string());
            r.evidence.spairs_reduced = st.reductions;
            return;
          }
        }
      }
    }
    r.evidence.spairs_reduced = st.reductions;
  });
}

/// The standard-tableau subset for shapes mu ⊴ lambda with mu_1 = lambda_1
/// is a lex GB and generates I_lambda.
template <class Field>
CheckReport check_remark35_with(const Partition& lambda, const std::vector<Polynomial<Field>>& subset,
                                const Field& field) {
  const int n = lambda.n();
  return detail::timed("remark35", detail::params(n, "lower<=" + lambda.to_string(), detail::lex_name(n), field.spec(), 0, "remark35"),
                       [&](CheckReport& r) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    const std::size_t nn = static_cast<std::size_t>(n);
    r.evidence.generators = subset.size();
    auto cert = is_groebner_basis(subset, lex, {}, false);
    r.evidence.spairs_reduced = cert.reductions;
    if (!cert.is_groebner) {
      r.fail("restricted standard set is not a lex Gröbner basis");
      return;
    }
    auto full = polynomials_of(specht_generators(detail::principal_lower(lambda), GeneratorMode::column_standard, field));
    IdealBasis<Field> a(nn, field, subset), b(nn, field, full);
    r.evidence.memberships_tested = subset.size() + full.size();
    if (!ideal_equal(a, b, lex)) r.fail("restricted standard set generates a different ideal");
  });
}

template <class Field>
CheckReport check_remark35(const Partition& lambda, const Field& field) {
  return check_remark35_with(lambda, polynomials_of(remark35_generators(lambda, field)), field);
}

/// Lex and universal checks over F_p, plus: reduced GBs over F_p are the
/// mod-p images of the ones over Q, for every tested order.
inline CheckReport check_finite_field_with(const PartitionFilter& filter, const std::vector<Polynomial<PrimeField>>& gens_p,
                                           std::uint32_t prime, std::size_t order_budget, std::uint64_t seed) {
  const int n = filter.n();
  const PrimeField fp(prime);
  const Rationals q;
  auto p = detail::params(n, filter.to_string(), "all-lex+random", fp.spec(), seed, "column_standard");
  p["order_budget"] = order_budget;
  return detail::timed("finite_field", std::move(p), [&](CheckReport& r) {
    auto lexgb = check_lexgb_with(filter, gens_p, fp);
    auto universal = check_universal_with(filter, gens_p, order_budget, seed, fp);
    r.evidence.spairs_reduced = lexgb.evidence.spairs_reduced + universal.evidence.spairs_reduced;
    r.evidence.orders_tested = universal.evidence.orders_tested;
    r.evidence.generators = gens_p.size();
    if (!lexgb.passed()) r.fail("lex check over " + fp.spec().to_string() + ": " + lexgb.reason);
    if (!universal.passed()) r.fail("universal check over " + fp.spec().to_string() + ": " + universal.reason);
    if (r.verdict == Verdict::fail) return;

    auto gens_q = polynomials_of(specht_generators(filter, GeneratorMode::column_standard, q));
    auto orders = all_lex_orders(static_cast<std::size_t>(n));
    auto extra = random_orders(static_cast<std::size_t>(n), order_budget, seed);
    orders.insert(orders.end(), extra.begin(), extra.end());
    for (const auto& ord : orders) {
      GroebnerStats st;
      auto gb_q = buchberger(gens_q, ord, {}, &st);
      auto gb_p = buchberger(gens_p, ord, {}, &st);
      r.evidence.spairs_reduced += st.reductions;
      std::vector<Polynomial<PrimeField>> image;
      try {
        for (const auto& g : gb_q) image.push_back(reduce_mod_p(g, fp));
      } catch (const std::domain_error&) {
        r.fail("reduced GB over Q has a denominator divisible by p under " + ord.to_string());
        return;
      }
      if (image != gb_p) {
        r.fail("reduced GB over " + fp.spec().to_string() + " is not the mod-p image of the one over Q under " +
               ord.to_string());
        return;
      }
    }
  });
}

inline CheckReport check_finite_field(const PartitionFilter& filter, std::uint32_t prime, std::size_t order_budget,
                                      std::uint64_t seed) {
  const PrimeField fp(prime);
  return check_finite_field_with(
      filter, polynomials_of(specht_generators(filter, GeneratorMode::column_standard, fp)), prime, order_budget, seed);
}

/// For every comparable mu ⊲ lambda in P_n, the standard generators of
/// I_mu reduce to 0 modulo a GB of I_lambda. `reversed` swaps the roles,
/// which must fail (negative control).
template <class Field>
CheckReport check_containment(int n, const Field& field, bool reversed = false) {
  return detail::timed(reversed ? "containment:negative_control" : "containment",
                       detail::params(n, "all", detail::lex_name(n), field.spec(), 0, reversed ? "negative_control" : "standard"),
                       [&](CheckReport& r) {
    const auto lex = MonomialOrder::lex(static_cast<std::size_t>(n));
    auto shapes = enumerate_partitions(n);
    std::map<Partition, std::vector<Polynomial<Field>>> gbs;
    GroebnerStats st;
    auto gb_of = [&](const Partition& lambda) -> const std::vector<Polynomial<Field>>& {
      auto it = gbs.find(lambda);
      if (it != gbs.end()) return it->second;
      auto gens = polynomials_of(specht_generators(detail::principal_lower(lambda), GeneratorMode::column_standard, field));
      return gbs.emplace(lambda, buchberger(gens, lex, {}, &st)).first->second;
    };
    for (const auto& lambda : shapes)
      for (const auto& mu : shapes) {
        if (lambda == mu || !dominates(lambda, mu)) continue;
        const Partition& big = reversed ? mu : lambda;
        const Partition& small = reversed ? lambda : mu;
        const auto& gb = gb_of(big);
        for (const auto& t : enumerate_tableaux(small, TableauMode::standard)) {
          ++r.evidence.memberships_tested;
          if (!member_of_gb(specht_polynomial(t, field), gb, lex)) {
            r.fail("f_T for T=" + t.to_string() + " of shape " + small.to_string() + " is not in I_" + big.to_string());
            r.evidence.spairs_reduced = st.reductions;
            return;
          }
        }
      }
    r.evidence.spairs_reduced = st.reductions;
  });
}

// ---------------------------------------------------------------------------
// Suite

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids{"containment", "finite_field", "lemma21", "lemma33",
                                            "lexgb",       "reduced",      "remark35", "universal"};
  return ids;
}

struct SuiteConfig {
  std::vector<std::string> checks;  ///< check ids, or {"all"}
  std::optional<int> n;             ///< a single n; otherwise 2..max_n
  int max_n = 5;
  std::optional<FilterExpr> filter;
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  std::size_t trials = 20;
  std::optional<std::size_t> order_budget;
  bool allow_n7 = false;
  bool negative_controls = false;
  unsigned jobs = 0;  ///< 0: hardware concurrency
};

namespace detail {

using Job = std::function<CheckReport()>;

/// Lower filters for n under the default budgets: every filter for n <= 5,
/// principal filters for larger n.
inline std::vector<PartitionFilter> filter_grid(int n, const SuiteConfig& cfg) {
  if (cfg.filter) return {cfg.filter->resolve(n, FilterKind::lower)};
  if (n <= 5) return enumerate_lower_filters(n);
  std::vector<PartitionFilter> out;
  for (const auto& lambda : enumerate_partitions(n)) out.push_back(principal_lower(lambda));
  return out;
}

inline void add_jobs(const std::string& id, int n, const SuiteConfig& cfg, std::vector<Job>& jobs) {
  const std::size_t budget = cfg.order_budget.value_or(n >= 6 ? 10 : 25);
  const FieldSpec field = cfg.field;
  const bool infinite = field.is_rationals();
  auto skip = [&](const std::string& filter) {
    jobs.push_back([=] {
      return skipped_report(id, params(n, filter, "", field, cfg.seed, ""), "requires infinite field");
    });
  };

  if (id == "lexgb" || id == "universal") {
    for (const auto& f : filter_grid(n, cfg))
      jobs.push_back([=] {
        return with_field(field, [&](auto k) {
          return id == "lexgb" ? check_lexgb(f, k) : check_universal(f, budget, cfg.seed, k);
        });
      });
  } else if (id == "reduced") {
    for (const auto& f : filter_grid(n, cfg)) {
      if (!infinite) {
        skip(f.to_string());
        continue;
      }
      jobs.push_back([=] { return check_reduced(f); });
    }
  } else if (id == "finite_field") {
    std::vector<std::uint32_t> primes = infinite ? std::vector<std::uint32_t>{2, 3, 7} : std::vector<std::uint32_t>{field.p};
    for (const auto& f : filter_grid(n, cfg))
      for (auto p : primes) jobs.push_back([=] { return check_finite_field(f, p, budget, cfg.seed); });
  } else if (id == "remark35") {
    std::vector<Partition> shapes;
    if (cfg.filter) {
      auto f = cfg.filter->resolve(n, FilterKind::lower);
      shapes = f.members();
    } else {
      shapes = enumerate_partitions(n);
    }
    for (const auto& lambda : shapes)
      jobs.push_back([=] { return with_field(field, [&](auto k) { return check_remark35(lambda, k); }); });
  } else if (id == "lemma21") {
    if (!infinite) return skip("all");
    jobs.push_back([=] { return check_lemma21(n, cfg.samples, cfg.seed); });
  } else if (id == "lemma33") {
    if (!infinite) return skip("all-upper");
    jobs.push_back([=] { return check_lemma33(n, cfg.trials, cfg.seed); });
  } else if (id == "containment") {
    jobs.push_back([=] { return with_field(field, [&](auto k) { return check_containment(n, k); }); });
  } else {
    throw std::invalid_argument("unknown check '" + id + "'");
  }
}

/// Deliberately corrupted fixtures, one per check class; each must fail.
inline void add_negative_controls(std::vector<Job>& jobs, std::uint64_t seed) {
  jobs.push_back([] {
    // label {21,111} but only the Vandermonde generator
    const Rationals q;
    PartitionFilter f(3, {Partition{2, 1}, Partition{1, 1, 1}}, FilterKind::lower);
    auto r = check_lexgb_with(f, polynomials_of(specht_generators(PartitionFilter(3, {Partition{1, 1, 1}}, FilterKind::lower),
                                                                  GeneratorMode::column_standard, q)), q, "negative_control");
    r.check_id += ":negative_control";
    return r;
  });
  jobs.push_back([seed] {
    const Rationals q;
    PartitionFilter f(3, {Partition{2, 1}, Partition{1, 1, 1}}, FilterKind::lower);
    std::vector<Polynomial<Rationals>> gens{parse_polynomial("x1-x2", 3, q), parse_polynomial("x2-x3", 3, q)};
    auto r = check_universal_with(f, gens, 0, seed, q);
    r.check_id += ":negative_control";
    return r;
  });
  jobs.push_back([] {
    const Rationals q;
    PartitionFilter f(3, {Partition{1, 1, 1}}, FilterKind::lower);
    auto r = check_reduced_with(f, {parse_polynomial("((x1-x2)*(x1-x3)*(x2-x3))^2", 3, q)});
    r.check_id += ":negative_control";
    return r;
  });
  jobs.push_back([seed] { return lemma21_negative_control(Partition{2, 1}, Partition{1, 1, 1}, seed); });
  jobs.push_back([seed] { return check_lemma33(3, 5, seed, true); });
  jobs.push_back([] {
    const Rationals q;
    Partition lambda{2, 1, 1};
    auto subset = polynomials_of(remark35_generators(lambda, q));
    subset.pop_back();
    auto r = check_remark35_with(lambda, subset, q);
    r.check_id += ":negative_control";
    return r;
  });
  jobs.push_back([seed] {
    const PrimeField f2(2);
    PartitionFilter f(3, {Partition{2, 1}, Partition{1, 1, 1}}, FilterKind::lower);
    std::vector<Polynomial<PrimeField>> gens{parse_polynomial("x1-x2", 3, f2), parse_polynomial("x2-x3", 3, f2)};
    auto r = check_finite_field_with(f, gens, 2, 0, seed);
    r.check_id += ":negative_control";
    return r;
  });
  jobs.push_back([] { return check_containment(3, Rationals{}, true); });
}

inline std::vector<CheckReport> run_jobs(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<CheckReport> out(jobs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) out[i] = jobs[i]();
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

}  // namespace detail

/// Run the configured checks; reports come back in canonical order.
inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  if (cfg.checks.empty()) throw std::invalid_argument("no checks selected");
  std::vector<std::string> ids;
  for (const auto& c : cfg.checks) {
    if (c == "all") {
      ids = known_checks();
      break;
    }
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw std::invalid_argument("unknown check '" + c + "'");
    ids.push_back(c);
  }
  std::vector<int> ns;
  if (cfg.n) {
    ns.push_back(*cfg.n);
  } else {
    for (int n = 2; n <= cfg.max_n; ++n) ns.push_back(n);
  }
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n >= 7 && !cfg.allow_n7) throw std::invalid_argument("n >= 7 requires --allow-n7");
    if (n > 9) throw std::invalid_argument("n > 9 is not supported");
  }
  if (cfg.filter && ns.size() > 1) throw std::invalid_argument("--filter needs a single --n");

  std::vector<detail::Job> jobs;
  for (const auto& id : ids)
    for (int n : ns) detail::add_jobs(id, n, cfg, jobs);
  if (cfg.negative_controls) detail::add_negative_controls(jobs, cfg.seed);

  auto reports = detail::run_jobs(jobs, cfg.jobs);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.sort_key() < b.sort_key(); });
  return reports;
}

/// Newline-delimited JSON, one report per line.
inline std::string reports_to_ndjson(const std::vector<CheckReport>& reports, bool include_timing = true) {
  std::string out;
  for (const auto& r : reports) out += r.to_json(include_timing).dump() + "\n";
  return out;
}

/// Fixed-width summary table.
inline std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::string out;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    std::string verdict = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "SKIP";
    std::string line = verdict + "  " + r.check_id;
    line.resize(std::max<std::size_t>(line.size(), 34), ' ');
    line += " n=" + r.parameters.value("n", nlohmann::json(0)).dump();
    line += " field=" + r.parameters.value("field", std::string("?"));
    auto filter = r.parameters.value("filter", std::string());
    if (!filter.empty()) line += " filter=" + filter;
    char ms[32];
    std::snprintf(ms, sizeof ms, " (%.1f ms)", r.timing_ms);
    line += ms;
    if (!r.reason.empty()) line += " -- " + r.reason;
    out += line + "\n";
    (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? fail : skipped)++;
  }
  out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skipped) + " skipped\n";
  return out;
}

}  // namespace spechtgb

#endif  // SPECHTGB_VERIFY_HPP
