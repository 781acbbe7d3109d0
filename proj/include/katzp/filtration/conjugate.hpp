#pragma once

#include <vector>

#include "katzp/conncalc/p_curvature.hpp"
#include "katzp/filtration/filtered_connection.hpp"

namespace katzp {

/// Increasing filtration G_0 ⊆ G_1 ⊆ ... ⊆ G_top = M by nabla-stable
/// subbundles whose graded pieces carry zero p-curvature. Built as the
/// kernel filtration G_i = ker(psi^{i+1}).
struct ConjFiltered {
  Connection conn;
  PCurvature psi;
  std::vector<Basis> steps;         // steps[i]: saturated basis of G_i
  std::vector<Basis> graded_lifts;  // graded_lifts[i]: lifts of a basis of G_i / G_{i-1}
  std::vector<Poly> saturation_defects;

  int top() const { return static_cast<int>(steps.size()) - 1; }
  const Basis& step(int i) const {
    static const Basis empty;
    return i < 0 ? empty : steps.at(static_cast<std::size_t>(i));
  }
};

/// Connection induced on G_i / G_{i-1}, in the basis given by the lifts.
inline Connection graded_connection(const ConjFiltered& cf, int i) {
  const auto fld = cf.conn.field();
  const Basis& lower = cf.step(i - 1);
  const Basis& lifts = cf.graded_lifts.at(static_cast<std::size_t>(i));
  Basis frame = lifts;
  frame.insert(frame.end(), lower.begin(), lower.end());
  MatrixRF m(fld, lifts.size(), lifts.size());
  for (std::size_t j = 0; j < lifts.size(); ++j) {
    const auto x = solve_in_span(fld, cf.conn.rank(), frame, nabla_apply(cf.conn, lifts[j]));
    if (!x) fail(ErrorCode::PostconditionFailure, "G_" + std::to_string(i) + " is not nabla-stable");
    for (std::size_t r = 0; r < lifts.size(); ++r) m(r, j) = (*x)[r];
  }
  return Connection::from_matrix(std::move(m));
}

/// Kernel filtration of the p-curvature; verifies nabla-stability of each
/// G_i and vanishing p-curvature on each graded piece before returning.
inline ConjFiltered conj_filtration(const Connection& conn) {
  ConjFiltered cf{conn, p_curvature(conn), {}, {}, {}};
  const auto fld = conn.field();
  const std::size_t n = conn.rank();
  if (!cf.psi.matrix.pow(n).is_zero()) fail(ErrorCode::NotNilpotent, "p-curvature is not nilpotent");

  MatrixRF power = cf.psi.matrix;
  while (true) {
    Basis g = mat_kernel(power);
    const bool full = g.size() == n;
    cf.steps.push_back(std::move(g));
    if (full) break;
    power = power * cf.psi.matrix;
  }
  for (std::size_t i = 0; i < cf.steps.size(); ++i) {
    cf.graded_lifts.push_back(complement_lifts(i == 0 ? Basis{} : cf.steps[i - 1], cf.steps[i], fld));
    Poly defect = cf.steps[i].empty() ? poly_from_ints(conn.characteristic(), {1})
                                      : maximal_minor_gcd(cf.steps[i], n);
    while (true) {
      const Poly common = gcd(defect, conn.base_denominator());
      if (common.degree() <= 0) break;
      defect = defect / common;
    }
    cf.saturation_defects.push_back(defect.monic());
  }

  for (std::size_t i = 0; i < cf.steps.size(); ++i) {
    for (const auto& v : cf.steps[i])
      if (!in_span(cf.steps[i], nabla_apply(conn, v), fld))
        fail(ErrorCode::PostconditionFailure, "G_" + std::to_string(i) + " is not nabla-stable");
    if (!p_curvature(graded_connection(cf, static_cast<int>(i))).matrix.is_zero())
      fail(ErrorCode::PostconditionFailure, "gr_" + std::to_string(i) + " has nonzero p-curvature");
  }
  return cf;
}

/// Maps psi-bar_i : gr_i -> gr_{i-1} induced by psi (psi(G_i) ⊆ G_{i-1}).
struct GradedPCurv {
  std::vector<MatrixRF> maps;  // maps[i] for i >= 1; maps[0] is the empty map gr_0 -> 0

  bool is_zero() const {
    for (const auto& m : maps)
      if (!m.is_zero()) return false;
    return true;
  }
};

inline GradedPCurv graded_p_curvature(const ConjFiltered& cf) {
  const auto fld = cf.conn.field();
  GradedPCurv out;
  out.maps.emplace_back(fld, 0, cf.graded_lifts.at(0).size());
  for (int i = 1; i <= cf.top(); ++i) {
    const Basis& lifts = cf.graded_lifts.at(static_cast<std::size_t>(i));
    const Basis& target = cf.graded_lifts.at(static_cast<std::size_t>(i - 1));
    Basis frame = target;
    const Basis& deeper = cf.step(i - 2);
    frame.insert(frame.end(), deeper.begin(), deeper.end());
    MatrixRF m(fld, target.size(), lifts.size());
    for (std::size_t j = 0; j < lifts.size(); ++j) {
      const auto x = solve_in_span(fld, cf.conn.rank(), frame, cf.psi.matrix * lifts[j]);
      if (!x) fail(ErrorCode::PostconditionFailure, "psi does not map G_" + std::to_string(i) + " into G_" +
                                                        std::to_string(i - 1));
      for (std::size_t r = 0; r < target.size(); ++r) m(r, j) = (*x)[r];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace katzp
