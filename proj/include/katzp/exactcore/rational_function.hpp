#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "katzp/exactcore/poly.hpp"

namespace katzp {

/// Element of F_p(t) in lowest terms with a monic denominator. Two equal
/// fractions always have identical representations.
class RationalFunction {
 public:
  RationalFunction() : num_(PrimeField(2)), den_(Poly::constant(PrimeField(2), FpElement(1, 2))) {}
  explicit RationalFunction(std::uint32_t p) : RationalFunction(Poly(PrimeField(p))) {}
  explicit RationalFunction(Poly num)
      : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.field().one())) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction constant(const FpElement& c) {
    return RationalFunction(Poly::constant(PrimeField(c.modulus), c));
  }
  static RationalFunction from_int(std::uint32_t p, std::int64_t n) { return constant(FpElement(n, p)); }
  static RationalFunction variable(std::uint32_t p) { return RationalFunction(Poly::variable(PrimeField(p))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::uint32_t characteristic() const { return num_.field().characteristic(); }
  PrimeField base_field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  /// d/dt by the quotient rule, renormalized.
  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// t -> t^p on numerator and denominator.
  RationalFunction frobenius_twist() const {
    return RationalFunction(katzp::frobenius_twist(num_), katzp::frobenius_twist(den_));
  }

  /// Substitute t -> g(t) for a rational function g.
  RationalFunction compose(const RationalFunction& g) const {
    auto horner = [&](const Poly& f) {
      RationalFunction acc(characteristic());
      for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + constant(f.coeffs()[i]);
      return acc;
    };
    return horner(num_) / horner(den_);
  }

  /// Value at a point; nullopt at a pole.
  std::optional<FpElement> evaluate(const FpElement& x) const {
    const FpElement d = den_.evaluate(x);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(x) / d;
  }

  RationalFunction pow(std::uint64_t e) const { return RationalFunction(num_.pow(e), den_.pow(e)); }
  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.characteristic());
    // cross-cancel before multiplying to keep degrees small
    const Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RationalFunction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "t") const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

 private:
  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(den_.field(), den_.field().one());
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const FpElement lc = den_.leading();
    if (!lc.is_one()) {
      const FpElement inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_;
  Poly den_;
};

/// Reduce num/den to lowest terms with monic denominator.
inline RationalFunction rf_normalize(const Poly& num, const Poly& den) { return RationalFunction(num, den); }

/// F_p(t) as a coefficient context.
struct FunctionField {
  using value_type = RationalFunction;

  std::uint32_t p = 2;

  FunctionField() = default;
  explicit FunctionField(std::uint32_t prime) : p(prime) { PrimeField check(prime); }

  std::uint32_t characteristic() const { return p; }
  value_type zero() const { return RationalFunction(p); }
  value_type one() const { return RationalFunction::from_int(p, 1); }
  value_type from_int(std::int64_t n) const { return RationalFunction::from_int(p, n); }
  static bool is_zero(const value_type& a) { return a.is_zero(); }

  friend bool operator==(const FunctionField&, const FunctionField&) = default;
};

/// Polynomials in an auxiliary variable over F_p(t).
using RFPoly = DensePoly<FunctionField>;

}  // namespace katzp
