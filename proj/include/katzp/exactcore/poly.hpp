#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "katzp/exactcore/error.hpp"
#include "katzp/exactcore/fp.hpp"

namespace katzp {

/// Coefficient context: a field descriptor with value semantics. Values
/// support the arithmetic operators; the descriptor supplies constants.
template <class F>
concept FieldContext = requires(const F& f, const typename F::value_type& a, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { F::is_zero(a) } -> std::same_as<bool>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { a / a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
};

/// Dense univariate polynomial, low degree first. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list.
template <FieldContext F>
class DensePoly {
 public:
  using field_type = F;
  using coeff_type = typename F::value_type;

  DensePoly() = default;
  explicit DensePoly(F field) : field_(std::move(field)) {}
  DensePoly(F field, std::vector<coeff_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static DensePoly constant(const F& field, const coeff_type& c) { return DensePoly(field, {c}); }
  static DensePoly monomial(const F& field, const coeff_type& c, std::size_t degree) {
    std::vector<coeff_type> v(degree + 1, field.zero());
    v[degree] = c;
    return DensePoly(field, std::move(v));
  }
  static DensePoly variable(const F& field) { return monomial(field, field.one(), 1); }
  static DensePoly from_ints(const F& field, std::initializer_list<std::int64_t> ints) {
    std::vector<coeff_type> v;
    for (auto n : ints) v.push_back(field.from_int(n));
    return DensePoly(field, std::move(v));
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const coeff_type> coeffs() const { return c_; }
  coeff_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  coeff_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  DensePoly monic() const {
    if (is_zero()) return *this;
    return *this * (field_.one() / leading());
  }

  coeff_type evaluate(const coeff_type& x) const {
    coeff_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Formal derivative: sum n c_n x^(n-1).
  DensePoly derivative() const {
    std::vector<coeff_type> d;
    for (std::size_t n = 1; n < c_.size(); ++n) d.push_back(field_.from_int(static_cast<std::int64_t>(n)) * c_[n]);
    return DensePoly(field_, std::move(d));
  }

  /// Apply a coefficient map (e.g. differentiation or twisting of coefficients).
  template <class Fn>
  DensePoly map_coeffs(Fn&& fn) const {
    std::vector<coeff_type> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(fn(c));
    return DensePoly(field_, std::move(v));
  }

  /// Substitute x -> x^k.
  DensePoly inflate(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<coeff_type> v((c_.size() - 1) * k + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return DensePoly(field_, std::move(v));
  }

  /// Composition f(g(x)) by Horner.
  DensePoly compose(const DensePoly& g) const {
    DensePoly acc(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(field_, *it);
    return acc;
  }

  DensePoly pow(std::uint64_t e) const {
    DensePoly base = *this, acc = constant(field_, field_.one());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    const F& fld = a.field_;
    std::vector<coeff_type> v(std::max(a.c_.size(), b.c_.size()), fld.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return DensePoly(fld, std::move(v));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  DensePoly operator-() const { return map_coeffs([](const coeff_type& c) { return -c; }); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly(a.field_);
    std::vector<coeff_type> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (F::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(a.field_, std::move(v));
  }
  friend DensePoly operator*(const DensePoly& a, const coeff_type& s) {
    return a.map_coeffs([&](const coeff_type& c) { return c * s; });
  }
  friend DensePoly operator*(const coeff_type& s, const DensePoly& a) { return a * s; }
  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<coeff_type> r = c_;
    if (c_.size() < d.c_.size()) return {DensePoly(field_), *this};
    std::vector<coeff_type> q(c_.size() - d.c_.size() + 1, field_.zero());
    const coeff_type inv_lc = field_.one() / d.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
      const coeff_type t = r[k + d.c_.size() - 1] * inv_lc;
      q[k] = t;
      if (F::is_zero(t)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = r[k + j] - t * d.c_[j];
    }
    return {DensePoly(field_, std::move(q)), DensePoly(field_, std::move(r))};
  }
  friend DensePoly operator/(const DensePoly& a, const DensePoly& b) { return a.divmod(b).first; }
  friend DensePoly operator%(const DensePoly& a, const DensePoly& b) { return a.divmod(b).second; }

  /// Division that must be exact; throws otherwise.
  DensePoly exact_div(const DensePoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::InvalidInput, "inexact polynomial division");
    return q;
  }

  bool divides(const DensePoly& other) const { return (other % *this).is_zero(); }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (F::is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit = c_[i] == field_.one();
      if (!unit || i == 0) {
        std::ostringstream cs;
        cs << c_[i];
        const std::string s = cs.str();
        const bool wrap = i != 0 && s.find_first_of("+-/ ") != std::string::npos;
        os << (wrap ? "(" + s + ")" : s);
      }
      if (i >= 1) os << (unit ? "" : "*") << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const DensePoly& a) { return os << a.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && F::is_zero(c_.back())) c_.pop_back();
  }

  F field_{};
  std::vector<coeff_type> c_;
};

/// Monic gcd (zero if both inputs vanish).
template <FieldContext F>
DensePoly<F> gcd(DensePoly<F> a, DensePoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FieldContext F>
struct ExtendedGcd {
  DensePoly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <FieldContext F>
ExtendedGcd<F> ext_gcd(const DensePoly<F>& a, const DensePoly<F>& b) {
  const F& fld = a.field();
  DensePoly<F> r0 = a, r1 = b;
  DensePoly<F> s0 = DensePoly<F>::constant(fld, fld.one()), s1(fld);
  DensePoly<F> t0(fld), t1 = DensePoly<F>::constant(fld, fld.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto inv = fld.one() / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Polynomials over F_p.
using Poly = DensePoly<PrimeField>;

inline Poly poly_from_ints(std::uint32_t p, std::initializer_list<std::int64_t> ints) {
  return Poly::from_ints(PrimeField(p), ints);
}

inline Poly poly_derivative(const Poly& f) { return f.derivative(); }

/// f(t) -> f(t^p); over F_p this is also f(t)^p.
inline Poly frobenius_twist(const Poly& f) { return f.inflate(f.field().characteristic()); }

}  // namespace katzp
