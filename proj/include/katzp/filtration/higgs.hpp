#pragma once

#include <map>

#include "katzp/filtration/filtered_connection.hpp"

namespace katzp {

/// Graded pieces of a Griffiths-transverse filtration with the induced maps
/// theta_n : gr^n -> gr^{n-1}. Only the component of nabla(s) modulo F^n
/// survives, so theta_n is linear over functions.
struct HiggsField {
  int lo = 0, hi = 0;
  std::map<int, Basis> graded_lifts;  // degree -> lifts of a basis of gr^degree
  std::map<int, MatrixRF> theta;      // n -> (dim gr^{n-1}) x (dim gr^n), n in (lo, hi]

  bool is_zero() const {
    for (const auto& [n, m] : theta)
      if (!m.is_zero()) return false;
    return true;
  }
};

/// Coordinates of v ∈ F^{n-1} along the gr^{n-1} lifts, discarding the F^n part.
inline VectorRF graded_coordinates(const FilteredConnection& fc, const Basis& lower_lifts, int n,
                                   const VectorRF& v) {
  Basis frame = lower_lifts;
  const Basis& fn = fc.step(n);
  frame.insert(frame.end(), fn.begin(), fn.end());
  const auto fld = fc.connection().field();
  const auto x = solve_in_span(fld, v.size(), frame, v);
  if (!x) fail(ErrorCode::GriffithsViolation, "nabla leaves F^" + std::to_string(n - 1));
  return VectorRF(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(lower_lifts.size()));
}

/// Higgs field computed from caller-chosen lifts (lifts[i] ⊂ F^i, one per
/// gr^i basis element). Different lifts of the same graded basis give the
/// same matrices.
inline HiggsField higgs_field_with_lifts(const FilteredConnection& fc, const std::map<int, Basis>& lifts) {
  const auto rep = check_griffiths(fc);
  if (!rep.transversal)
    fail(ErrorCode::GriffithsViolation,
         "nabla(F^" + std::to_string(rep.first_failure->first) + ") is not inside F^" +
             std::to_string(rep.first_failure->first - 1));
  HiggsField h;
  h.lo = fc.lo();
  h.hi = fc.hi();
  h.graded_lifts = lifts;
  const auto fld = fc.connection().field();
  for (int n = fc.lo() + 1; n <= fc.hi(); ++n) {
    const Basis& upper = lifts.at(n);
    const Basis& lower = lifts.at(n - 1);
    MatrixRF theta(fld, lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const auto coords = graded_coordinates(fc, lower, n, nabla_apply(fc.connection(), upper[j]));
      for (std::size_t i = 0; i < lower.size(); ++i) theta(i, j) = coords[i];
    }
    h.theta.emplace(n, std::move(theta));
  }
  return h;
}

inline HiggsField higgs_field(const FilteredConnection& fc) {
  std::map<int, Basis> lifts;
  for (int i = fc.lo(); i <= fc.hi(); ++i) lifts[i] = fc.graded_lifts(i);
  return higgs_field_with_lifts(fc, lifts);
}

}  // namespace katzp
