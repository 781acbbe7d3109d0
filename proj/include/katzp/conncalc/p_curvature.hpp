#pragma once

#include "katzp/conncalc/connection.hpp"

namespace katzp {

/// Matrix of the p-th iterate of the connection operator.
struct PCurvature {
  MatrixRF matrix;
  std::uint32_t p = 0;
};

/// B_1 = A, B_{k+1} = B_k' + A B_k; returns B_p. Applying the operator to
/// the constant frame vectors gives exactly this left-multiplied recursion.
inline PCurvature p_curvature(const Connection& conn) {
  const auto& a = conn.matrix();
  MatrixRF b = a;
  for (std::uint32_t k = 1; k < conn.characteristic(); ++k) b = derivative(b) + a * b;
  return {std::move(b), conn.characteristic()};
}

/// Rank-one closed form a^p + a^(p-1), computed without the recursion.
inline RationalFunction rank1_jacobson_oracle(const RationalFunction& a, std::uint32_t p) {
  RationalFunction d = a;
  for (std::uint32_t k = 0; k + 1 < p; ++k) d = d.derivative();
  return a.pow(p) + d;
}

struct HorizontalityReport {
  bool holds = false;
  MatrixRF derivative;   // psi'
  MatrixRF commutator;   // psi A - A psi
};

/// Horizontality of psi for a one-variable base: psi' = psi A - A psi.
inline HorizontalityReport horizontality_check(const Connection& conn, const PCurvature& psi) {
  HorizontalityReport rep;
  rep.derivative = katzp::derivative(psi.matrix);
  rep.commutator = psi.matrix * conn.matrix() - conn.matrix() * psi.matrix;
  rep.holds = rep.derivative == rep.commutator;
  return rep;
}

/// True when every entry of psi is a function of t^p (zero derivative).
inline bool has_zero_derivative(const MatrixRF& m) { return katzp::derivative(m).is_zero(); }

}  // namespace katzp
