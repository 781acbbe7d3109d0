#pragma once

#include <cstdint>

#include "katzp/exactcore/matrix.hpp"
#include "katzp/exactcore/truncated_ring.hpp"

namespace katzp {

struct FrobeniusKernelReport {
  std::uint32_t p = 0;
  std::uint32_t nilpotence = 0;
  std::uint32_t predicted_generator_degree = 0;  // ceil(N / p)
  std::size_t kernel_dimension = 0;
  bool matches_ideal = false;
  bool enumerated = false;   // brute force over every ring element was run
  bool enumeration_agrees = true;
  bool ok() const { return matches_ideal && enumeration_agrees; }
};

/// Checks that {a : a^p = 0} in F_p[x]/(x^N) is the ideal (x^ceil(N/p)).
/// The p-power map is F_p-linear, so its kernel is computed exactly by
/// linear algebra on the images of x^i; small rings are also enumerated.
inline FrobeniusKernelReport frobenius_kernel_check(const TruncatedRing& ring,
                                                    std::uint64_t enumeration_limit = 1u << 16) {
  FrobeniusKernelReport rep;
  rep.p = ring.p;
  rep.nilpotence = ring.nilpotence;
  rep.predicted_generator_degree = (ring.nilpotence + ring.p - 1) / ring.p;
  const std::uint32_t n = ring.nilpotence;
  const PrimeField fp(ring.p);

  MatrixFp frob(fp, n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const TruncElem image = ring.x_power(i).pow(ring.p);
    for (std::uint32_t r = 0; r < n; ++r) frob(r, i) = FpElement(image.coeff(r), ring.p);
  }
  const auto kernel = nullspace(frob);
  rep.kernel_dimension = kernel.size();
  bool inside = true;
  for (const auto& v : kernel)
    for (std::uint32_t r = 0; r < rep.predicted_generator_degree && r < n; ++r)
      if (!v[r].is_zero()) inside = false;
  rep.matches_ideal = inside && kernel.size() == n - std::min(n, rep.predicted_generator_degree);

  std::uint64_t count = 1;
  bool small = true;
  for (std::uint32_t i = 0; i < n && small; ++i) {
    count *= ring.p;
    small = count <= enumeration_limit;
  }
  if (small) {
    rep.enumerated = true;
    TruncElem a = ring.zero();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < n; ++i, c /= ring.p) a.set_coeff(i, static_cast<std::int64_t>(c % ring.p));
      const bool killed = a.pow(ring.p).is_zero();
      const bool in_ideal = a.valuation() >= rep.predicted_generator_degree;
      if (killed != in_ideal) {
        rep.enumeration_agrees = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace katzp
