#pragma once

#include <cstdint>
#include <random>

#include "katzp/exactcore/matrix.hpp"
#include "katzp/exactcore/truncated_ring.hpp"

namespace katzp {

/// Seeded generator with a portable bounded draw, so fuzz runs are
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = eng_(); while (x >= limit);
    return x % bound;
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

  FpElement fp(std::uint32_t p) { return {static_cast<std::int64_t>(below(p)), p}; }
  FpElement nonzero_fp(std::uint32_t p) { return {1 + static_cast<std::int64_t>(below(p - 1)), p}; }

  Poly poly(std::uint32_t p, int max_degree) {
    std::vector<FpElement> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(fp(p));
    return Poly(PrimeField(p), std::move(c));
  }

  /// Random element with all coefficients below x^min_valuation zero.
  TruncElem trunc(const TruncatedRing& ring, std::uint32_t min_valuation = 0) {
    TruncElem a = ring.zero();
    for (std::uint32_t i = min_valuation; i < ring.nilpotence; ++i) a.set_coeff(i, below(ring.p));
    return a;
  }

  /// num(t) / s(t)^k with deg num <= max_degree and k <= max_pole.
  RationalFunction rf_with_poles(const Poly& s, int max_degree, int max_pole) {
    const std::uint32_t p = s.field().characteristic();
    return RationalFunction(poly(p, max_degree), s.pow(below(static_cast<std::uint64_t>(max_pole) + 1)));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace katzp
