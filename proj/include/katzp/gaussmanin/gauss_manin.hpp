#pragma once

#include <string>
#include <vector>

#include "katzp/filtration/higgs.hpp"
#include "katzp/gaussmanin/family.hpp"

namespace katzp {

/// Gauss-Manin connection on H^1_dR in the basis omega_i = x^i dx/y,
/// 0 <= i < 2g. Column j holds the coordinates of nabla_{d/dt} omega_j.
struct GMConnection {
  std::vector<std::string> basis_labels;
  Connection conn;
};

namespace detail {

/// P dx/y^3 -> Q dx/y modulo exact forms. With a f + b f' = 1 one has
/// P dx/y^3 = P a dx/y + P b f' dx/y^3, and d(B/y) = B' dx/y - (1/2) B f' dx/y^3.
inline RFPoly reduce_pole(const HyperellipticFamily& fam, const RFPoly& P, const RFPoly& a, const RFPoly& b) {
  const RFPoly& f = fam.f();
  const auto [q, B] = (P * b).divmod(f);
  const RFPoly A = P * a + q * f.derivative();
  return A + B.derivative() * f.field().from_int(2);
}

/// Q dx/y -> combination of x^i dx/y with i < 2g, using the exact forms
/// d(x^k y) = (k x^{k-1} f + (1/2) x^k f') dx/y.
inline RFPoly reduce_degree(const HyperellipticFamily& fam, RFPoly Q) {
  const RFPoly& f = fam.f();
  const FunctionField& fld = f.field();
  const int g = fam.genus();
  const RationalFunction half = fld.one() / fld.from_int(2);
  int steps = 0;
  while (Q.degree() >= 2 * g) {
    if (++steps > 10 * (2 * g + 1)) fail(ErrorCode::ReductionFailure, "degree reduction did not terminate");
    const auto k = static_cast<std::size_t>(Q.degree() - 2 * g);
    RFPoly exact = RFPoly::monomial(fld, half, k) * f.derivative();
    if (k > 0) exact += RFPoly::monomial(fld, fld.from_int(static_cast<std::int64_t>(k)), k - 1) * f;
    if (exact.degree() != Q.degree())
      fail(ErrorCode::ReductionFailure, "exact form x^" + std::to_string(k) + " y has vanishing leading term mod p");
    Q -= exact * (Q.leading() / exact.leading());
  }
  return Q;
}

}  // namespace detail

/// Griffiths-Dwork reduction of d/dt (x^i dx/y) = -(1/2) x^i f_t dx/y^3.
inline GMConnection gm_connection(const HyperellipticFamily& fam) {
  const RFPoly& f = fam.f();
  const FunctionField& fld = f.field();
  const auto bez = ext_gcd(f, f.derivative());
  if (bez.g.degree() != 0) fail(ErrorCode::ReductionFailure, "f and f' share a factor: fiber is singular");
  const auto n = static_cast<std::size_t>(2 * fam.genus());
  const RationalFunction minus_half = fld.from_int(-1) / fld.from_int(2);
  GMConnection gm{{}, Connection::trivial(fam.characteristic(), n)};
  MatrixRF a(fld, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    gm.basis_labels.push_back(j == 0 ? "dx/y" : j == 1 ? "x dx/y" : "x^" + std::to_string(j) + " dx/y");
    const RFPoly P = RFPoly::monomial(fld, minus_half, j) * fam.f_t();
    const RFPoly Q = detail::reduce_degree(fam, detail::reduce_pole(fam, P, bez.s, bez.t));
    for (std::size_t i = 0; i < n; ++i) a(i, j) = Q.coeff(i);
  }
  gm.conn = Connection(fam.bad_locus(), std::move(a));
  return gm;
}

/// F^1 = span(x^i dx/y, i < g) inside F^0 = H^1_dR.
inline FilteredConnection hodge_filtration(const GMConnection& gm) {
  const std::size_t n = gm.conn.rank();
  const FunctionField fld = gm.conn.field();
  Basis all, regular;
  for (std::size_t i = 0; i < n; ++i) {
    VectorRF e(n, fld.zero());
    e[i] = fld.one();
    all.push_back(e);
    if (i < n / 2) regular.push_back(e);
  }
  return FilteredConnection(gm.conn, 0, {all, regular});
}

inline HiggsField kodaira_spencer(const GMConnection& gm) { return higgs_field(hodge_filtration(gm)); }

/// Cyclic-vector elimination: the monic operator d^k - sum_{i<k} c_i d^i of
/// least order killing v. Returns (c_0, ..., c_{k-1}).
inline VectorRF picard_fuchs(const Connection& conn, const VectorRF& v) {
  if (is_zero(v)) fail(ErrorCode::InvalidInput, "cyclic vector must be nonzero");
  Basis orbit{v};
  while (true) {
    const VectorRF next = nabla_apply(conn, orbit.back());
    if (auto c = solve_in_span(conn.field(), conn.rank(), orbit, next)) return *c;
    orbit.push_back(next);
  }
}

}  // namespace katzp
