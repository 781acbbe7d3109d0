#pragma once

#include <vector>

#include "katzp/conncalc/fuzz.hpp"
#include "katzp/filtration/conjugate.hpp"
#include "katzp/filtration/rees.hpp"

namespace katzp {

/// Random Griffiths-transverse filtration: either two steps with a random
/// F^1, or for rank 3 the cyclic flag span(v) ⊂ span(v, nabla v) ⊂ M.
inline FilteredConnection random_filtered(Rng& rng, std::uint32_t p) {
  while (true) {
    const std::size_t rank = 2 + rng.below(2);
    const auto conn = random_connection(rng, p, rank);
    const FunctionField fld = conn.field();
    Basis all;
    for (std::size_t i = 0; i < rank; ++i) {
      VectorRF e(rank, fld.zero());
      e[i] = fld.one();
      all.push_back(e);
    }
    const VectorRF v = random_section(rng, conn.base_denominator(), rank);
    if (is_zero(v)) continue;
    if (rank == 3 && rng.coin()) {
      const VectorRF dv = nabla_apply(conn, v);
      if (in_span({v}, dv, fld)) continue;
      return FilteredConnection(conn, 0, {all, {v, dv}, {v}});
    }
    Basis f1{v};
    if (rank == 3 && rng.coin()) {
      const VectorRF w = random_section(rng, conn.base_denominator(), rank);
      if (in_span(f1, w, fld)) continue;
      f1.push_back(w);
    }
    return FilteredConnection(conn, static_cast<int>(rng.below(3)) - 1, {all, f1});
  }
}

/// Connection with nilpotent p-curvature: upper triangular with diagonal
/// entries c * u'/u (each gauge-trivial), moved by a random gauge.
inline Connection random_nilpotent_connection(Rng& rng, std::uint32_t p, std::size_t rank) {
  const FunctionField fld(p);
  const Poly s = random_base_denominator(rng, p);
  MatrixRF a(fld, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const RationalFunction u(s);
    a(i, i) = fld.from_int(rng.between(0, static_cast<std::int64_t>(p) - 1)) * u.derivative() / u;
    for (std::size_t j = i + 1; j < rank; ++j) a(i, j) = rng.rf_with_poles(s, 2, 1);
  }
  return gauge_transform(Connection(s, std::move(a)), random_gauge(rng, p, rank));
}

inline PropertyResult check_higgs_lift_independence(Rng& rng, const std::vector<std::uint32_t>& primes,
                                                    std::size_t cases) {
  PropertyResult r{"higgs_lift_independence", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const auto fc = random_filtered(rng, primes[i % primes.size()]);
    const auto s = fc.connection().base_denominator();
    std::map<int, Basis> moved;
    for (int n = fc.lo(); n <= fc.hi(); ++n) {
      Basis lifts = fc.graded_lifts(n);
      for (auto& v : lifts)
        for (const auto& w : fc.step(n + 1)) v = v + rng.rf_with_poles(s, 2, 1) * w;
      moved[n] = std::move(lifts);
    }
    if (higgs_field(fc).theta != higgs_field_with_lifts(fc, moved).theta) ++r.failures;
  }
  return r;
}

inline PropertyResult check_higgs_linearity(Rng& rng, const std::vector<std::uint32_t>& primes, std::size_t cases) {
  PropertyResult r{"higgs_linearity", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const auto fc = random_filtered(rng, primes[i % primes.size()]);
    const auto h = higgs_field(fc);
    const auto f = rng.rf_with_poles(fc.connection().base_denominator(), 3, 1);
    for (const auto& [n, theta] : h.theta) {
      const Basis& upper = h.graded_lifts.at(n);
      for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto coords =
            graded_coordinates(fc, h.graded_lifts.at(n - 1), n, nabla_apply(fc.connection(), f * upper[j]));
        if (coords != f * theta.column(j)) ++r.failures;
      }
    }
  }
  return r;
}

inline PropertyResult check_rees_fibers(Rng& rng, const std::vector<std::uint32_t>& primes, std::size_t cases) {
  PropertyResult r{"rees_fibers", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto fc = random_filtered(rng, p);
    const auto rm = rees_build(fc);
    const auto h = higgs_field(fc);
    bool ok = true;
    // lambda = 1: gauge-equivalent to the input through the adapted frame
    const auto one = rees_fiber(rm, FpElement(1, p));
    ok = ok && gauge_transform(Connection(one.base_denominator, one.matrix), rm.frame()).matrix() == fc.connection().matrix();
    // lambda = 0: only the theta blocks survive
    const auto zero = rees_fiber(rm, FpElement(0, p));
    for (std::size_t a = 0; a < rm.degrees.size(); ++a)
      for (std::size_t b = 0; b < rm.degrees.size(); ++b)
        if (rm.degrees[a] + 1 != rm.degrees[b] && !zero.matrix(a, b).is_zero()) ok = false;
    std::size_t col = 0;
    for (int n = fc.lo(); n <= fc.hi(); ++n) {
      const std::size_t width = h.graded_lifts.at(n).size();
      if (n > fc.lo()) {
        const auto& theta = h.theta.at(n);
        const std::size_t row0 = col - h.graded_lifts.at(n - 1).size();
        for (std::size_t a = 0; a < theta.rows(); ++a)
          for (std::size_t b = 0; b < theta.cols(); ++b)
            if (zero.matrix(row0 + a, col + b) != theta(a, b)) ok = false;
      }
      col += width;
    }
    // lambda = u: conjugate to the rescaled lambda = 1 fiber by diag(u^deg)
    const FpElement u = rng.nonzero_fp(p);
    MatrixRF d(fc.connection().field(), rm.degrees.size(), rm.degrees.size());
    MatrixRF d_inv = d;
    for (std::size_t a = 0; a < rm.degrees.size(); ++a) {
      const FpElement w = rm.degrees[a] >= 0 ? u.pow(static_cast<std::uint64_t>(rm.degrees[a]))
                                             : u.inverse().pow(static_cast<std::uint64_t>(-rm.degrees[a]));
      d(a, a) = RationalFunction::constant(w);
      d_inv(a, a) = RationalFunction::constant(w.inverse());
    }
    const auto fiber_u = rees_fiber(rm, u);
    ok = ok && fiber_u.scale == lambda_rescale(one, u).scale &&
         d_inv * fiber_u.matrix * d == lambda_rescale(one, u).matrix;
    if (!ok) ++r.failures;
  }
  return r;
}

inline PropertyResult check_conjugate_filtration(Rng& rng, const std::vector<std::uint32_t>& primes,
                                                 std::size_t cases) {
  PropertyResult r{"conjugate_filtration", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto conn = random_nilpotent_connection(rng, p, 2 + rng.below(2));
    try {
      const auto cf = conj_filtration(conn);
      const auto bar = graded_p_curvature(cf);
      if (!cf.psi.matrix.is_zero() && bar.is_zero()) ++r.failures;
      if (cf.steps.back().size() != conn.rank()) ++r.failures;
    } catch (const Error&) {
      ++r.failures;
    }
  }
  return r;
}

/// Every filtration invariant; deterministic in (seed, cases).
inline std::vector<PropertyResult> run_filtration_suite(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7};
  std::vector<PropertyResult> out;
  out.push_back(check_higgs_lift_independence(rng, primes, cases));
  out.push_back(check_higgs_linearity(rng, primes, cases));
  out.push_back(check_rees_fibers(rng, primes, cases));
  out.push_back(check_conjugate_filtration(rng, primes, cases));
  return out;
}

}  // namespace katzp
