#ifndef SPECHTGB_MONOMIAL_HPP
#define SPECHTGB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spechtgb {

/// Ring dimensions up to 16 are supported; one extra slot is reserved for
/// the auxiliary variable used by ideal intersection.
inline constexpr std::size_t kMaxVariables = 17;

/// Fixed-width exponent vector. Unused slots are always zero, so the
/// array comparison is a canonical order-independent total order.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : n_(static_cast<std::uint8_t>(check_width(n))) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(const std::vector<int>& exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      e_[i] = static_cast<Exponent>(exps[i]);
    }
  }

  static Monomial variable(std::size_t n, std::size_t i, int power = 1) {
    Monomial m(n);
    m.e_.at(i) = static_cast<Exponent>(power);
    return m;
  }

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value) { e_[i] = static_cast<Exponent>(value); }

  int degree() const {
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 0xFFFFu) throw std::overflow_error("exponent overflow");
      r.e_[i] = static_cast<Exponent>(s);
    }
    return r;
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (b.e_[i] > a.e_[i]) throw std::domain_error("monomial does not divide");
      r.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  /// Drop variable `var`, shifting the later ones down.
  Monomial without(std::size_t var) const {
    Monomial r(n_ - 1);
    for (std::size_t i = 0, j = 0; i < n_; ++i)
      if (i != var) r.e_[j++] = e_[i];
    return r;
  }

  /// Same exponents, ring widened by `extra` trailing variables.
  Monomial widened(std::size_t extra) const {
    Monomial r = *this;
    r.n_ = static_cast<std::uint8_t>(check_width(n_ + extra));
    return r;
  }

  /// `x1^2*x3`, or `1`.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e_[i]) continue;
      if (!s.empty()) s += '*';
      s += 'x' + std::to_string(i + 1);
      if (e_[i] > 1) s += '^' + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

private:
  static std::size_t check_width(std::size_t n) {
    if (n > kMaxVariables) throw std::invalid_argument("too many variables (max 16 plus one auxiliary)");
    return n;
  }

  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

/// A monomial order on K[x_1..x_n] described by a kind and a variable
/// ranking (ascending: ranking[0] is the smallest variable under the
/// lex tie-break). Variables are 0-based internally.
///
/// With `aux_top` set the order lives on n+1 variables: the extra variable
/// (index n) is compared first, then the underlying order on x_1..x_n.
/// That is the block elimination order used for ideal intersection.
class MonomialOrder {
public:
  enum class Kind { lex, graded_lex, graded_revlex, weight };

  static MonomialOrder lex(std::vector<int> ranking) { return MonomialOrder(Kind::lex, std::move(ranking), {}); }
  static MonomialOrder lex(std::size_t n) { return lex(identity(n)); }
  static MonomialOrder graded_lex(std::vector<int> ranking) {
    return MonomialOrder(Kind::graded_lex, std::move(ranking), {});
  }
  static MonomialOrder graded_revlex(std::vector<int> ranking) {
    return MonomialOrder(Kind::graded_revlex, std::move(ranking), {});
  }
  static MonomialOrder graded_revlex(std::size_t n) { return graded_revlex(identity(n)); }
  static MonomialOrder weight(std::vector<mpq_class> weights, std::vector<int> ranking) {
    return MonomialOrder(Kind::weight, std::move(ranking), std::move(weights));
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& ranking() const { return ranking_; }
  const std::vector<mpq_class>& weights() const { return weights_; }
  bool aux_top() const { return aux_top_; }

  /// Number of variables the order compares (including the auxiliary one).
  std::size_t n() const { return ranking_.size() + (aux_top_ ? 1 : 0); }

  /// Elimination order: auxiliary variable x_{n+1} above everything.
  MonomialOrder with_aux_top() const {
    if (aux_top_) throw std::logic_error("order already has an auxiliary block");
    MonomialOrder o = *this;
    o.aux_top_ = true;
    return o;
  }
  MonomialOrder without_aux() const {
    MonomialOrder o = *this;
    o.aux_top_ = false;
    return o;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (aux_top_) {
      const std::size_t t = ranking_.size();
      if (a[t] != b[t]) return a[t] <=> b[t];
    }
    switch (kind_) {
      case Kind::lex: return compare_lex(a, b);
      case Kind::graded_lex: {
        int da = base_degree(a), db = base_degree(b);
        if (da != db) return da <=> db;
        return compare_lex(a, b);
      }
      case Kind::graded_revlex: {
        int da = base_degree(a), db = base_degree(b);
        if (da != db) return da <=> db;
        for (int v : ranking_)
          if (a[v] != b[v]) return b[v] <=> a[v];
        return std::strong_ordering::equal;
      }
      case Kind::weight: {
        std::int64_t wa = 0, wb = 0;
        for (std::size_t v = 0; v < ranking_.size(); ++v) {
          wa += scaled_[v] * a[v];
          wb += scaled_[v] * b[v];
        }
        if (wa != wb) return wa <=> wb;
        return compare_lex(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Variables (0-based) in ascending order under this order.
  std::vector<int> variable_order() const {
    const std::size_t n = ranking_.size();
    std::vector<int> vars = identity(n);
    std::sort(vars.begin(), vars.end(), [&](int i, int j) {
      return less(Monomial::variable(this->n(), i), Monomial::variable(this->n(), j));
    });
    return vars;
  }

  /// The lex order with the same ascending ordering of the variables.
  MonomialOrder induced_lex() const { return lex(variable_order()); }

  /// Text form accepted by the order parser, 1-based.
  std::string to_string() const {
    auto list = [](const std::vector<int>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i] + 1);
      return s;
    };
    std::string s;
    switch (kind_) {
      case Kind::lex: s = "lex:" + list(ranking_); break;
      case Kind::graded_lex: s = "grlex:" + list(ranking_); break;
      case Kind::graded_revlex: s = "grevlex:" + list(ranking_); break;
      case Kind::weight: {
        s = "weight:";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + weights_[i].get_str();
        s += ":lex:" + list(ranking_);
        break;
      }
    }
    return aux_top_ ? "elim(" + s + ")" : s;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_ && a.weights_ == b.weights_ && a.aux_top_ == b.aux_top_;
  }

  static std::vector<int> identity(std::size_t n) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }

private:
  MonomialOrder(Kind kind, std::vector<int> ranking, std::vector<mpq_class> weights)
      : kind_(kind), ranking_(std::move(ranking)), weights_(std::move(weights)) {
    std::vector<int> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(ranking_.size())) throw std::invalid_argument("variable ranking is not a permutation");
    if (ranking_.size() + 1 > kMaxVariables) throw std::invalid_argument("too many variables");
    if (kind_ == Kind::weight) {
      if (weights_.size() != ranking_.size()) throw std::invalid_argument("weight vector length must equal n");
      mpz_class den = 1;
      for (auto& w : weights_) {
        w.canonicalize();
        if (sgn(w) <= 0) throw std::invalid_argument("weights must be positive");
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
      }
      for (auto& w : weights_) {
        mpz_class s = w.get_num() * (den / w.get_den());
        if (!s.fits_slong_p() || s > (mpz_class(1) << 40)) throw std::invalid_argument("weight out of range");
        scaled_.push_back(s.get_si());
      }
    }
  }

  int base_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t v = 0; v < ranking_.size(); ++v) d += m[v];
    return d;
  }

  std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) const {
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] <=> b[*it];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::vector<int> ranking_;
  std::vector<mpq_class> weights_;
  std::vector<std::int64_t> scaled_;
  bool aux_top_ = false;
};

}  // namespace spechtgb

#endif  // SPECHTGB_MONOMIAL_HPP
