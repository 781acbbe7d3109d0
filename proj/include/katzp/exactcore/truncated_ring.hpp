#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "katzp/exactcore/fp.hpp"

namespace katzp {

/// Element of F_p[x]/(x^N): exactly N residues, low degree first.
class TruncElem {
 public:
  TruncElem() = default;
  TruncElem(std::uint32_t p, std::uint32_t n) : p_(p), c_(n, 0) {}
  TruncElem(std::uint32_t p, std::uint32_t n, const std::vector<std::int64_t>& coeffs) : TruncElem(p, n) {
    for (std::size_t i = 0; i < coeffs.size() && i < n; ++i) c_[i] = FpElement::reduce(coeffs[i], p);
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t nilpotence() const { return static_cast<std::uint32_t>(c_.size()); }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  void set_coeff(std::size_t i, std::int64_t v) { c_.at(i) = FpElement::reduce(v, p_); }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }
  /// Smallest i with a nonzero coefficient of x^i; N for zero.
  std::uint32_t valuation() const {
    for (std::uint32_t i = 0; i < c_.size(); ++i)
      if (c_[i]) return i;
    return nilpotence();
  }

  TruncElem pow(std::uint64_t e) const {
    TruncElem base = *this, acc(p_, nilpotence());
    if (!c_.empty()) acc.c_[0] = 1 % p_;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend void check_same(const TruncElem& a, const TruncElem& b) {
    if (a.p_ != b.p_ || a.c_.size() != b.c_.size())
      fail(ErrorCode::RingMismatch, "F_" + std::to_string(a.p_) + "[x]/(x^" + std::to_string(a.c_.size()) +
                                        ") vs F_" + std::to_string(b.p_) + "[x]/(x^" +
                                        std::to_string(b.c_.size()) + ")");
  }

  friend TruncElem operator+(const TruncElem& a, const TruncElem& b) {
    check_same(a, b);
    TruncElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (a.c_[i] + b.c_[i]) % a.p_;
    return r;
  }
  TruncElem operator-() const {
    TruncElem r = *this;
    for (auto& v : r.c_) v = v ? p_ - v : 0;
    return r;
  }
  friend TruncElem operator-(const TruncElem& a, const TruncElem& b) { return a + (-b); }
  friend TruncElem operator*(const TruncElem& a, const TruncElem& b) {
    check_same(a, b);
    const std::size_t n = a.c_.size();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; i + j < n; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
    }
    TruncElem r(a.p_, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
  }
  friend TruncElem operator*(const FpElement& s, const TruncElem& a) {
    if (s.modulus != a.p_) fail(ErrorCode::RingMismatch, "scalar from a different prime field");
    TruncElem r = a;
    for (auto& v : r.c_) v = static_cast<std::uint32_t>(std::uint64_t{v} * s.value % a.p_);
    return r;
  }
  TruncElem& operator+=(const TruncElem& o) { return *this = *this + o; }
  TruncElem& operator*=(const TruncElem& o) { return *this = *this * o; }

  friend bool operator==(const TruncElem& a, const TruncElem& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      if (!out.empty()) out += " + ";
      if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
      if (i >= 1) out += (c_[i] != 1 ? "*x" : "x");
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncElem& a) { return os << a.to_string(); }

 private:
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

/// The test ring F_p[x]/(x^N).
struct TruncatedRing {
  using value_type = TruncElem;

  std::uint32_t p = 2;
  std::uint32_t nilpotence = 1;  // N

  TruncatedRing() = default;
  TruncatedRing(std::uint32_t prime, std::uint32_t n) : p(prime), nilpotence(n) {
    PrimeField check(prime);
    if (n == 0) fail(ErrorCode::InvalidInput, "nilpotence order must be positive");
  }

  std::uint32_t characteristic() const { return p; }
  value_type zero() const { return {p, nilpotence}; }
  value_type one() const { return from_int(1); }
  value_type from_int(std::int64_t n) const {
    value_type r(p, nilpotence);
    r.set_coeff(0, n);
    return r;
  }
  value_type x_power(std::uint32_t k, std::int64_t c = 1) const {
    value_type r(p, nilpotence);
    if (k < nilpotence) r.set_coeff(k, c);
    return r;
  }
  static bool is_zero(const value_type& a) { return a.is_zero(); }

  friend bool operator==(const TruncatedRing&, const TruncatedRing&) = default;
};

}  // namespace katzp
