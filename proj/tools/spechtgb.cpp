// Command-line front end: generator listings, Gröbner bases, the
// vanishing-ideal oracle and the verification suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spechtgb/spechtgb.hpp"

namespace {

using namespace spechtgb;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<int> n;
  int max_n = 5;
  std::string filter;
  std::string order;
  std::string field = "Q";
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  std::size_t trials = 20;
  std::optional<std::size_t> order_budget;
  std::string report = "text";
  std::string out;
  std::string mode = "column_standard";
  std::string check;
  bool negative_controls = false;
  bool allow_n7 = false;
  unsigned jobs = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(opt.out);
  if (!os) throw UsageError("cannot open " + opt.out + " for writing");
  os << text;
}

/// n from --n or from the partitions in --filter.
int resolve_n(const Options& opt, const std::optional<FilterExpr>& filter) {
  if (opt.n) {
    if (filter && filter->n() != *opt.n) throw UsageError("--filter partitions do not match --n");
    return *opt.n;
  }
  if (filter) return filter->n();
  throw UsageError("--n or --filter is required");
}

std::optional<FilterExpr> parsed_filter(const Options& opt) {
  if (opt.filter.empty()) return std::nullopt;
  return parse_filter(opt.filter);
}

MonomialOrder resolve_order(const Options& opt, int n) {
  if (opt.order.empty()) return MonomialOrder::lex(static_cast<std::size_t>(n));
  return parse_order(opt.order, static_cast<std::size_t>(n));
}

GeneratorMode resolve_mode(const std::string& mode) {
  if (mode == "column_standard") return GeneratorMode::column_standard;
  if (mode == "all_tableaux") return GeneratorMode::all_tableaux;
  if (mode == "standard") return GeneratorMode::standard;
  throw UsageError("unknown --mode '" + mode + "'");
}

template <class Field>
nlohmann::json polys_json(const std::vector<Polynomial<Field>>& polys, const MonomialOrder& ord) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : polys) arr.push_back(print_polynomial(p, ord));
  return arr;
}

int run_gens(const Options& opt) {
  auto fexpr = parsed_filter(opt);
  if (!fexpr) throw UsageError("gens needs --filter");
  const int n = resolve_n(opt, fexpr);
  auto filter = fexpr->resolve(n, FilterKind::lower);
  if (filter.kind() != FilterKind::lower) throw UsageError("gens needs a lower filter");
  auto ord = resolve_order(opt, n);
  auto mode = resolve_mode(opt.mode);
  return with_field(parse_field(opt.field), [&](auto k) {
    auto gens = specht_generators(filter, mode, k);
    if (opt.report == "json") {
      nlohmann::json j{{"n", n}, {"filter", filter.to_string()}, {"field", k.spec().to_string()},
                       {"order", ord.to_string()}, {"mode", to_string(mode)}};
      j["generators"] = nlohmann::json::array();
      for (const auto& g : gens)
        j["generators"].push_back({{"shape", g.shape().to_string()}, {"tableau", g.tableau.to_string()},
                                   {"polynomial", print_polynomial(g.polynomial, ord)}});
      emit(opt, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (const auto& g : gens)
        os << g.shape().to_compact_string() << "  " << g.tableau.to_string() << "  "
           << print_polynomial(g.polynomial, ord) << "\n";
      emit(opt, os.str());
    }
    return 0;
  });
}

int run_gb(const Options& opt) {
  auto fexpr = parsed_filter(opt);
  if (!fexpr) throw UsageError("gb needs --filter");
  const int n = resolve_n(opt, fexpr);
  auto filter = fexpr->resolve(n, FilterKind::lower);
  if (filter.kind() != FilterKind::lower) throw UsageError("gb needs a lower filter");
  auto ord = resolve_order(opt, n);
  return with_field(parse_field(opt.field), [&](auto k) {
    GroebnerStats st;
    auto gb = buchberger(polynomials_of(specht_generators(filter, resolve_mode(opt.mode), k)), ord, {}, &st);
    if (opt.report == "json") {
      nlohmann::json j{{"n", n}, {"filter", filter.to_string()}, {"field", k.spec().to_string()},
                       {"order", ord.to_string()}, {"basis", polys_json(gb, ord)},
                       {"spairs_reduced", st.reductions}};
      emit(opt, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (const auto& g : gb) os << print_polynomial(g, ord) << "\n";
      emit(opt, os.str());
    }
    return 0;
  });
}

int run_oracle(const Options& opt) {
  auto fexpr = parsed_filter(opt);
  if (!fexpr) throw UsageError("oracle needs --filter");
  const int n = resolve_n(opt, fexpr);
  if (!parse_field(opt.field).is_rationals()) throw UsageError("oracle requires --field Q");
  // lower filters name the Specht side; the oracle works on the complement
  PartitionFilter g = fexpr->form == FilterExpr::Form::upper_closure ? fexpr->resolve(n, FilterKind::upper)
                                                                     : fexpr->resolve(n, FilterKind::lower).complement();
  auto ord = resolve_order(opt, n);
  const Rationals q;
  std::vector<Polynomial<Rationals>> basis;
  if (g.empty()) {
    basis = {Polynomial<Rationals>::one(static_cast<std::size_t>(n), q)};
  } else {
    auto oracle = vanishing_ideal_oracle(g, q);
    basis = groebner_basis(oracle, ord);
  }
  if (opt.report == "json") {
    nlohmann::json j{{"n", n}, {"upper_filter", g.to_string()}, {"order", ord.to_string()}, {"basis", polys_json(basis, ord)}};
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (basis.empty()) os << "0\n";
    for (const auto& b : basis) os << print_polynomial(b, ord) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.check.empty()) throw UsageError("verify needs a check name or 'all'");
  SuiteConfig cfg;
  cfg.checks = {opt.check};
  cfg.filter = parsed_filter(opt);
  if (opt.n)
    cfg.n = opt.n;
  else if (cfg.filter)
    cfg.n = cfg.filter->n();
  cfg.max_n = opt.max_n;
  cfg.field = parse_field(opt.field);
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.trials = opt.trials;
  cfg.order_budget = opt.order_budget;
  cfg.allow_n7 = opt.allow_n7;
  cfg.negative_controls = opt.negative_controls;
  cfg.jobs = opt.jobs;
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(opt, opt.report == "json" ? reports_to_ndjson(reports) : reports_to_text(reports));

  bool failed = false;
  for (const auto& r : reports) {
    const bool control = r.check_id.find(":negative_control") != std::string::npos;
    // a negative control is healthy exactly when it fails
    if (control ? r.verdict != Verdict::fail : r.verdict == Verdict::fail) failed = true;
  }
  return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht ideals: generators, Gröbner bases, vanishing-ideal oracle and verification"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "number of variables")->check(CLI::Range(1, 16));
    sub->add_option("--filter", opt.filter, "filter, e.g. \"lower<=[3,2]\" or \"411,33\"");
    sub->add_option("--order", opt.order, "monomial order, e.g. lex:3,1,2 or grevlex");
    sub->add_option("--field", opt.field, "Q or F<p>");
    sub->add_option("--report", opt.report, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", opt.out, "write output to a file");
  };

  auto* gens = app.add_subcommand("gens", "list Specht generators of a lower filter");
  common(gens);
  gens->add_option("--mode", opt.mode, "column_standard | all_tableaux | standard");
  auto* gb = app.add_subcommand("gb", "reduced Gröbner basis of the Specht ideal of a lower filter");
  common(gb);
  gb->add_option("--mode", opt.mode, "generator mode");
  auto* oracle = app.add_subcommand("oracle", "vanishing ideal of the strata outside a lower filter");
  common(oracle);
  auto* verify = app.add_subcommand("verify", "run named checks");
  common(verify);
  verify->add_option("check", opt.check, "check name or 'all'");
  verify->add_option("--max-n", opt.max_n, "largest n when --n is not given");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--samples", opt.samples, "points per stratum");
  verify->add_option("--trials", opt.trials, "random polynomials per filter");
  verify->add_option("--order-budget", opt.order_budget, "random orders per filter");
  verify->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
  verify->add_flag("--negative-controls", opt.negative_controls, "also run the corrupted fixtures");
  verify->add_flag("--allow-n7", opt.allow_n7, "permit n = 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gens) return run_gens(opt);
    if (*gb) return run_gb(opt);
    if (*oracle) return run_oracle(opt);
    return run_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
