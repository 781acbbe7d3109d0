#pragma once

#include <string>
#include <vector>

#include "katzp/conncalc/lambda_connection.hpp"
#include "katzp/conncalc/p_curvature.hpp"
#include "katzp/conncalc/taylor.hpp"
#include "katzp/exactcore/random.hpp"

namespace katzp {

/// Base denominators used by the generators: t, t - 1, t(t - 1), t^2 + 1.
inline Poly random_base_denominator(Rng& rng, std::uint32_t p) {
  switch (rng.below(4)) {
    case 0: return poly_from_ints(p, {0, 1});
    case 1: return poly_from_ints(p, {-1, 1});
    case 2: return poly_from_ints(p, {0, -1, 1});
    default: return poly_from_ints(p, {1, 0, 1});
  }
}

inline VectorRF random_section(Rng& rng, const Poly& s, std::size_t rank, int max_degree = 2) {
  VectorRF v;
  for (std::size_t i = 0; i < rank; ++i) v.push_back(rng.rf_with_poles(s, max_degree, 1));
  return v;
}

inline Connection random_connection(Rng& rng, std::uint32_t p, std::size_t rank, int max_degree = 2,
                                    int max_pole = 2) {
  const Poly s = random_base_denominator(rng, p);
  MatrixRF a(FunctionField(p), rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      a(i, j) = rng.coin(1, 5) ? RationalFunction(p) : rng.rf_with_poles(s, max_degree, max_pole);
  return Connection(s, std::move(a));
}

/// Polynomial gauge matrix with nonzero determinant.
inline MatrixRF random_gauge(Rng& rng, std::uint32_t p, std::size_t rank) {
  while (true) {
    MatrixRF g(FunctionField(p), rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) g(i, j) = RationalFunction(rng.poly(p, i == j ? 2 : 1));
    if (!determinant(g).is_zero()) return g;
  }
}

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

inline PropertyResult check_o_linearity(Rng& rng, const std::vector<std::uint32_t>& primes, std::size_t cases) {
  PropertyResult r{"o_linearity", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto conn = random_connection(rng, p, 1 + rng.below(3));
    const auto f = rng.rf_with_poles(conn.base_denominator(), 3, 1);
    const auto v = random_section(rng, conn.base_denominator(), conn.rank());
    const auto psi = p_curvature(conn);
    const bool ok = nabla_power(conn, f * v, p) == f * nabla_power(conn, v, p) &&
                    nabla_power(conn, v, p) == psi.matrix * v;
    if (!ok) ++r.failures;
  }
  return r;
}

inline PropertyResult check_horizontality(Rng& rng, const std::vector<std::uint32_t>& primes, std::size_t cases) {
  PropertyResult r{"horizontality", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto conn = random_connection(rng, p, 1 + rng.below(3));
    if (!horizontality_check(conn, p_curvature(conn)).holds) ++r.failures;
  }
  return r;
}

inline PropertyResult check_gauge_covariance(Rng& rng, const std::vector<std::uint32_t>& primes,
                                             std::size_t cases) {
  PropertyResult r{"gauge_covariance", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const std::size_t rank = 1 + rng.below(3);
    const auto conn = random_connection(rng, p, rank);
    const auto g = random_gauge(rng, p, rank);
    const auto moved = gauge_transform(conn, g);
    if (p_curvature(moved).matrix != g * p_curvature(conn).matrix * *try_inverse(g)) ++r.failures;
  }
  return r;
}

inline PropertyResult check_rank1_oracle(Rng& rng, const std::vector<std::uint32_t>& primes, std::size_t cases) {
  PropertyResult r{"rank1_oracle", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto conn = random_connection(rng, p, 1, 3, 3);
    if (p_curvature(conn).matrix(0, 0) != rank1_jacobson_oracle(conn.matrix()(0, 0), p)) ++r.failures;
  }
  return r;
}

inline PropertyResult check_rank1_additivity(Rng& rng, const std::vector<std::uint32_t>& primes,
                                             std::size_t cases) {
  PropertyResult r{"rank1_additivity", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const Poly s = random_base_denominator(rng, p);
    const auto a = rng.rf_with_poles(s, 3, 2), b = rng.rf_with_poles(s, 3, 2);
    const FunctionField fld(p);
    auto psi = [&](const RationalFunction& x) {
      return p_curvature(Connection(s, MatrixRF(fld, {{x}}))).matrix(0, 0);
    };
    if (psi(a + b) != psi(a) + psi(b)) ++r.failures;
  }
  return r;
}

inline PropertyResult check_taylor_multiplicativity(Rng& rng, const std::vector<std::uint32_t>& primes,
                                                    std::size_t cases) {
  PropertyResult r{"taylor_multiplicativity", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint32_t p = primes[i % primes.size()];
    const auto conn = random_connection(rng, p, 1 + rng.below(3));
    const auto f = rng.rf_with_poles(conn.base_denominator(), 3, 1);
    const auto v = random_section(rng, conn.base_denominator(), conn.rank());
    if (!taylor_multiplicativity_check(conn, f, v, 2 * p).holds) ++r.failures;
  }
  return r;
}

/// Every conncalc invariant; deterministic in (seed, cases).
inline std::vector<PropertyResult> run_conncalc_suite(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7};
  std::vector<PropertyResult> out;
  out.push_back(check_o_linearity(rng, primes, cases));
  out.push_back(check_horizontality(rng, primes, cases));
  out.push_back(check_gauge_covariance(rng, primes, cases));
  out.push_back(check_rank1_oracle(rng, primes, cases));
  out.push_back(check_rank1_additivity(rng, primes, cases));
  out.push_back(check_taylor_multiplicativity(rng, {2, 3, 5}, cases));
  return out;
}

}  // namespace katzp
