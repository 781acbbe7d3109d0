#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "katzp/exactcore/error.hpp"

namespace katzp {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue class modulo a prime. Binary operations require equal moduli.
struct FpElement {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  constexpr FpElement() = default;
  constexpr FpElement(std::int64_t v, std::uint32_t p) : value(reduce(v, p)), modulus(p) {}

  static constexpr std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }

  constexpr bool is_zero() const { return value == 0; }
  constexpr bool is_one() const { return value == 1; }

  /// Representative in (-p/2, p/2], handy for printing signs.
  constexpr std::int64_t signed_value() const {
    return value > modulus / 2 ? static_cast<std::int64_t>(value) - modulus : value;
  }

  FpElement pow(std::uint64_t e) const {
    std::uint64_t base = value, acc = 1 % modulus;
    while (e) {
      if (e & 1) acc = acc * base % modulus;
      base = base * base % modulus;
      e >>= 1;
    }
    return {static_cast<std::int64_t>(acc), modulus};
  }

  FpElement inverse() const {
    if (value == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(modulus));
    std::int64_t a = value, b = modulus, x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return {x0, modulus};
  }

  friend void check_same(const FpElement& a, const FpElement& b) {
    if (a.modulus != b.modulus)
      fail(ErrorCode::RingMismatch,
           "F_" + std::to_string(a.modulus) + " vs F_" + std::to_string(b.modulus));
  }

  friend FpElement operator+(const FpElement& a, const FpElement& b) {
    check_same(a, b);
    std::uint32_t s = a.value + b.value;
    if (s >= a.modulus) s -= a.modulus;
    FpElement r; r.value = s; r.modulus = a.modulus;
    return r;
  }
  friend FpElement operator-(const FpElement& a, const FpElement& b) {
    check_same(a, b);
    FpElement r; r.modulus = a.modulus;
    r.value = a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value;
    return r;
  }
  friend FpElement operator*(const FpElement& a, const FpElement& b) {
    check_same(a, b);
    FpElement r; r.modulus = a.modulus;
    r.value = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % a.modulus);
    return r;
  }
  friend FpElement operator/(const FpElement& a, const FpElement& b) { return a * b.inverse(); }
  FpElement operator-() const {
    FpElement r; r.modulus = modulus; r.value = value == 0 ? 0 : modulus - value;
    return r;
  }
  FpElement& operator+=(const FpElement& o) { return *this = *this + o; }
  FpElement& operator-=(const FpElement& o) { return *this = *this - o; }
  FpElement& operator*=(const FpElement& o) { return *this = *this * o; }
  FpElement& operator/=(const FpElement& o) { return *this = *this / o; }

  friend bool operator==(const FpElement& a, const FpElement& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }

  friend std::ostream& operator<<(std::ostream& os, const FpElement& a) { return os << a.value; }
};

/// The prime field F_p as a coefficient context for the generic containers.
struct PrimeField {
  using value_type = FpElement;

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime)) fail(ErrorCode::InvalidInput, std::to_string(prime) + " is not prime");
  }

  std::uint32_t characteristic() const { return p; }
  value_type zero() const { return {0, p}; }
  value_type one() const { return {1, p}; }
  value_type from_int(std::int64_t n) const { return {n, p}; }
  static bool is_zero(const value_type& a) { return a.is_zero(); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

}  // namespace katzp
