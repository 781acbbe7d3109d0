#pragma once

#include <optional>
#include <vector>

#include "katzp/conncalc/connection.hpp"
#include "katzp/exactcore/binomial.hpp"

namespace katzp {

/// Coefficients of the Taylor expansion in the divided-power variable
/// h^[n] = h^n / n!: the n-th coefficient is nabla^n applied to the section.
struct TaylorCocycle {
  std::size_t order = 0;
  std::vector<VectorRF> terms;
};

inline TaylorCocycle taylor_expand(const Connection& conn, const VectorRF& v, std::size_t order) {
  if (order == 0) fail(ErrorCode::InvalidInput, "Taylor order must be at least 1");
  TaylorCocycle out{order, {}};
  out.terms.reserve(order);
  VectorRF cur = v;
  for (std::size_t n = 0; n < order; ++n) {
    out.terms.push_back(cur);
    if (n + 1 < order) cur = nabla_apply(conn, cur);
  }
  return out;
}

/// Taylor series of a function: n-th coefficient f^(n).
inline std::vector<RationalFunction> taylor_of_function(const RationalFunction& f, std::size_t order) {
  std::vector<RationalFunction> out;
  RationalFunction cur = f;
  for (std::size_t n = 0; n < order; ++n) {
    out.push_back(cur);
    cur = cur.derivative();
  }
  return out;
}

/// Product of divided-power series: h^[a] h^[b] = binom(a+b, a) h^[a+b].
inline std::vector<VectorRF> divided_power_product(const std::vector<RationalFunction>& f,
                                                   const std::vector<VectorRF>& v, std::uint32_t p) {
  const std::size_t order = std::min(f.size(), v.size());
  const PascalTable binom(p, order);
  std::vector<VectorRF> out;
  for (std::size_t n = 0; n < order; ++n) {
    VectorRF acc(v[0].size(), RationalFunction(p));
    for (std::size_t k = 0; k <= n; ++k) {
      const auto c = binom(n, k);
      if (c == 0) continue;
      acc = acc + (RationalFunction::from_int(p, c) * f[k]) * v[n - k];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

struct MultiplicativityReport {
  bool holds = true;
  std::optional<std::size_t> first_mismatch;
};

/// T(f v) = taylor(f) T(v) through the given order.
inline MultiplicativityReport taylor_multiplicativity_check(const Connection& conn, const RationalFunction& f,
                                                            const VectorRF& v, std::size_t order) {
  const auto lhs = taylor_expand(conn, f * v, order).terms;
  const auto rhs = divided_power_product(taylor_of_function(f, order), taylor_expand(conn, v, order).terms,
                                         conn.characteristic());
  MultiplicativityReport rep;
  for (std::size_t n = 0; n < order; ++n)
    if (lhs[n] != rhs[n]) {
      rep.holds = false;
      rep.first_mismatch = n;
      break;
    }
  return rep;
}

}  // namespace katzp
