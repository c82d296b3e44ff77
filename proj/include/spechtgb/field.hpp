#ifndef SPECHTGB_FIELD_HPP
#define SPECHTGB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace spechtgb {

/// Runtime description of a coefficient field: either Q or F_p.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rationals() const { return kind == Kind::rationals; }
  std::string to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return {Kind::prime_field, p};
}

/// The rational numbers, backed by GMP rationals kept in lowest terms.
class Rationals {
public:
  using Element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  bool infinite() const { return true; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// Sign for display purposes (+1, 0, -1).
  int sign(const Element& a) const { return sgn(a); }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field F_p with canonical representatives 0..p-1.
class PrimeField {
public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).p) {}

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }
  bool infinite() const { return false; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw std::domain_error("denominator vanishes in F" + std::to_string(p_));
    return div(from_mpz(num), d);
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == one(); }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t(a) + p_ - b); }
  Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t(a) * b % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // a^(p-2) by square-and-multiply
    Element result = one(), base = a;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  int sign(Element a) const { return a == 0 ? 0 : 1; }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// Calls `fn` with a concrete field object matching `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rationals()) return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField(spec.p));
}

}  // namespace spechtgb

#endif  // SPECHTGB_FIELD_HPP
