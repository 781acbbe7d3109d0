#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "katzp/exactcore/binomial.hpp"
#include "katzp/exactcore/error.hpp"
#include "katzp/exactcore/truncated_ring.hpp"

namespace katzp {

struct PdValidationReport {
  bool valid = true;
  bool starts_with_one = true;
  /// First (n, m) with binom(n+m, n) a_{n+m} != a_n a_m.
  std::optional<std::pair<std::size_t, std::size_t>> violated;
  /// Smallest n0 with a_n = 0 for n0 <= n <= K, if any.
  std::optional<std::size_t> nilpotence_witness;

  /// a_0 = 1 and every relation inside the window holds (nilpotence aside).
  bool relations_hold() const { return starts_with_one && !violated; }
};

/// Truncated nilpotent divided-power sequence (a_0 = 1, a_1, ..., a_K)
/// over a ring context such as TruncatedRing. Entries past K are unknown:
/// operations that would need them throw rather than guess.
template <class Ring>
class PdSequence {
 public:
  using value_type = typename Ring::value_type;

  PdSequence(Ring ring, std::vector<value_type> entries) : ring_(std::move(ring)), a_(std::move(entries)) {
    if (a_.empty()) fail(ErrorCode::InvalidInput, "PD sequence needs at least a_0");
  }

  /// The identity (1, 0, 0, ...) with truncation K.
  static PdSequence zero(const Ring& ring, std::size_t truncation) {
    std::vector<value_type> a(truncation + 1, ring.zero());
    a[0] = ring.one();
    return PdSequence(ring, std::move(a));
  }

  const Ring& ring() const { return ring_; }
  std::size_t truncation() const { return a_.size() - 1; }
  const value_type& operator[](std::size_t n) const { return a_.at(n); }
  const std::vector<value_type>& entries() const { return a_; }

  PdValidationReport validate() const {
    PdValidationReport rep;
    const std::size_t k = truncation();
    const PascalTable binom(ring_.characteristic(), k);
    rep.starts_with_one = a_[0] == ring_.one();
    for (std::size_t total = 0; total <= k && !rep.violated; ++total)
      for (std::size_t n = 0; n <= total; ++n) {
        const std::size_t m = total - n;
        if (ring_.from_int(binom(total, n)) * a_[total] != a_[n] * a_[m]) {
          rep.violated = {n, m};
          break;
        }
      }
    std::size_t n0 = k + 1;
    while (n0 > 0 && Ring::is_zero(a_[n0 - 1])) --n0;
    if (n0 <= k) rep.nilpotence_witness = n0;
    rep.valid = rep.starts_with_one && !rep.violated && rep.nilpotence_witness.has_value();
    return rep;
  }
  bool is_valid() const { return validate().valid; }

  friend bool operator==(const PdSequence& a, const PdSequence& b) { return a.ring_ == b.ring_ && a.a_ == b.a_; }

 private:
  Ring ring_;
  std::vector<value_type> a_;
};

using TruncPdSequence = PdSequence<TruncatedRing>;

template <class Ring>
void require_compatible(const PdSequence<Ring>& a, const PdSequence<Ring>& b) {
  if (!(a.ring() == b.ring()) || a.truncation() != b.truncation())
    fail(ErrorCode::RingMismatch, "PD sequences over different rings or truncations");
}

/// Group law: (a + b)_n = sum_{i+j=n} a_i b_j.
template <class Ring>
PdSequence<Ring> pd_add(const PdSequence<Ring>& a, const PdSequence<Ring>& b) {
  require_compatible(a, b);
  const auto& ring = a.ring();
  std::vector<typename Ring::value_type> c(a.truncation() + 1, ring.zero());
  for (std::size_t n = 0; n < c.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i) c[n] = c[n] + a[i] * b[n - i];
  return PdSequence<Ring>(ring, std::move(c));
}

/// Inverse for the group law: a_n -> (-1)^n a_n.
template <class Ring>
PdSequence<Ring> pd_negate(const PdSequence<Ring>& a) {
  auto e = a.entries();
  for (std::size_t n = 1; n < e.size(); n += 2) e[n] = -e[n];
  return PdSequence<Ring>(a.ring(), std::move(e));
}

/// The sequence a^n / n! (zero from n = p on) attached to a with a^p = 0.
template <class Ring>
PdSequence<Ring> pd_canonical(const Ring& ring, const typename Ring::value_type& a, std::size_t truncation) {
  const std::uint32_t p = ring.characteristic();
  if (!Ring::is_zero(a.pow(p))) fail(ErrorCode::NotPNilpotent, "a^p != 0");
  std::vector<typename Ring::value_type> e(truncation + 1, ring.zero());
  e[0] = ring.one();
  FpElement inv_fact(1, p);
  auto power = ring.one();
  for (std::size_t n = 1; n <= truncation && n < p; ++n) {
    power = power * a;
    inv_fact = inv_fact / FpElement(static_cast<std::int64_t>(n), p);
    e[n] = inv_fact * power;
  }
  return PdSequence<Ring>(ring, std::move(e));
}

/// The quasi-ideal map: extract a_1.
template <class Ring>
typename Ring::value_type pd_forget(const PdSequence<Ring>& a) {
  return a.truncation() >= 1 ? a[1] : a.ring().zero();
}

/// b_{pn} = a_n and b_m = 0 for p not dividing m, up to `output_truncation`.
/// The result is re-validated against the PD relations before returning.
template <class Ring>
PdSequence<Ring> pd_verschiebung(const PdSequence<Ring>& a, std::size_t output_truncation) {
  const std::uint32_t p = a.ring().characteristic();
  if (output_truncation / p > a.truncation())
    fail(ErrorCode::TruncationTooSmall, "output window needs a_" + std::to_string(output_truncation / p) +
                                            " but input stops at a_" + std::to_string(a.truncation()));
  std::vector<typename Ring::value_type> b(output_truncation + 1, a.ring().zero());
  for (std::size_t m = 0; m <= output_truncation; m += p) b[m] = a[m / p];
  PdSequence<Ring> out(a.ring(), std::move(b));
  const auto rep = out.validate();
  if (!rep.relations_hold())
    fail(ErrorCode::PostconditionFailure, "Verschiebung output violates the PD relations");
  return out;
}

/// Inverse of Verschiebung on sequences with a_1 = 0: (1, a_p, a_{2p}, ...).
template <class Ring>
PdSequence<Ring> pd_verschiebung_preimage(const PdSequence<Ring>& a) {
  const std::uint32_t p = a.ring().characteristic();
  std::vector<typename Ring::value_type> e;
  for (std::size_t n = 0; n * p <= a.truncation(); ++n) e.push_back(a[n * p]);
  return PdSequence<Ring>(a.ring(), std::move(e));
}

}  // namespace katzp
