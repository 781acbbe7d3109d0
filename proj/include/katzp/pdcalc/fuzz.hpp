#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "katzp/exactcore/random.hpp"
#include "katzp/pdcalc/frobenius_kernel.hpp"
#include "katzp/pdcalc/pd_sequence.hpp"

namespace katzp {

/// Random valid PD sequence. Every PD sequence over an F_p-algebra has the
/// shape a_n = prod_k e_k^{d_k} / d_k! over the base-p digits d_k of n,
/// with free values e_k = a_{p^k} subject to e_k^p = 0.
inline TruncPdSequence random_pd_sequence(Rng& rng, const TruncatedRing& ring, std::size_t truncation,
                                          bool a1_zero = false) {
  const std::uint32_t p = ring.p;
  const std::uint32_t min_val = (ring.nilpotence + p - 1) / p;
  std::vector<TruncElem> e;
  for (std::size_t pk = 1; pk <= truncation; pk *= p) {
    const bool zero = (pk == 1 && a1_zero) || rng.coin(1, 4);
    e.push_back(zero ? ring.zero() : rng.trunc(ring, min_val));
  }
  std::vector<FpElement> inv_fact(p, FpElement(1, p));
  for (std::uint32_t d = 1; d < p; ++d) inv_fact[d] = inv_fact[d - 1] / FpElement(d, p);

  while (true) {
    std::vector<TruncElem> a(truncation + 1, ring.zero());
    for (std::size_t n = 0; n <= truncation; ++n) {
      TruncElem term = ring.one();
      std::size_t rest = n;
      for (std::size_t k = 0; rest > 0; ++k, rest /= p) {
        const std::uint32_t d = rest % p;
        if (d) term = inv_fact[d] * (term * e[k].pow(d));
      }
      a[n] = term;
    }
    TruncPdSequence seq(ring, std::move(a));
    const bool all_zero = std::all_of(e.begin(), e.end(), [](const TruncElem& x) { return x.is_zero(); });
    if (all_zero || seq.validate().nilpotence_witness) return seq;
    // no zero tail inside the window: drop the highest free value and rebuild
    for (std::size_t k = e.size(); k-- > 0;)
      if (!e[k].is_zero()) {
        e[k] = ring.zero();
        break;
      }
  }
}

struct PdSuiteReport {
  bool group_law = true;
  bool exactness = true;
  bool frobenius_kernel = true;
  std::vector<std::string> violations;
};

/// Group law, exactness and nilpotence checks on `cases` random inputs.
inline PdSuiteReport run_pd_suite(std::uint32_t p, std::uint32_t nilpotence, std::size_t truncation,
                                  std::size_t cases, std::uint64_t seed) {
  PdSuiteReport rep;
  const TruncatedRing ring(p, nilpotence);
  Rng rng(seed);
  const auto zero = TruncPdSequence::zero(ring, truncation);
  auto violation = [&](bool& flag, const std::string& what, std::size_t i) {
    flag = false;
    if (rep.violations.size() < 20) rep.violations.push_back(what + " (case " + std::to_string(i) + ")");
  };

  for (std::size_t i = 0; i < cases; ++i) {
    const auto a = random_pd_sequence(rng, ring, truncation);
    const auto b = random_pd_sequence(rng, ring, truncation);
    const auto c = random_pd_sequence(rng, ring, truncation);
    const auto ab = pd_add(a, b);
    // closure: the relations always; the zero tail only when it provably fits
    // in the window (a_n = 0 from n_a on and b_n = 0 from n_b on give n_a + n_b - 1)
    const auto sum_rep = ab.validate();
    const std::size_t tail = *a.validate().nilpotence_witness + *b.validate().nilpotence_witness;
    if (!sum_rep.relations_hold() || (tail <= truncation + 1 && !sum_rep.valid))
      violation(rep.group_law, "sum is not a valid PD sequence", i);
    if (pd_add(ab, c) != pd_add(a, pd_add(b, c))) violation(rep.group_law, "associativity", i);
    if (ab != pd_add(b, a)) violation(rep.group_law, "commutativity", i);
    if (pd_add(a, zero) != a) violation(rep.group_law, "identity", i);
    if (pd_add(a, pd_negate(a)) != zero) violation(rep.group_law, "inverse", i);
    if (pd_forget(ab) != pd_forget(a) + pd_forget(b)) violation(rep.group_law, "forget is not additive", i);
  }

  const std::size_t exact_cases = std::max<std::size_t>(cases * 2 / 5, 1);
  for (std::size_t i = 0; i < exact_cases; ++i) {
    const auto a = random_pd_sequence(rng, ring, truncation);
    if (!pd_forget(a).pow(p).is_zero()) violation(rep.exactness, "a_1^p != 0", i);
    const auto small = random_pd_sequence(rng, ring, truncation / p);
    const auto v = pd_verschiebung(small, truncation);
    if (!pd_forget(v).is_zero()) violation(rep.exactness, "forget after Verschiebung is nonzero", i);
    const auto other = random_pd_sequence(rng, ring, truncation / p);
    if (other != small && pd_verschiebung(other, truncation) == v)
      violation(rep.exactness, "Verschiebung not injective", i);

    const auto kernel_elem = random_pd_sequence(rng, ring, truncation, /*a1_zero=*/true);
    const auto pre = pd_verschiebung_preimage(kernel_elem);
    // the shorter window of the preimage need not contain its zero tail
    if (!pre.validate().relations_hold()) violation(rep.exactness, "preimage violates the PD relations", i);
    else if (pd_verschiebung(pre, truncation) != kernel_elem)
      violation(rep.exactness, "a_1 = 0 sequence not in the image of Verschiebung", i);
  }

  if (!frobenius_kernel_check(ring).ok()) {
    rep.frobenius_kernel = false;
    rep.violations.push_back("kernel of Frobenius differs from (x^ceil(N/p))");
  }
  return rep;
}

}  // namespace katzp
