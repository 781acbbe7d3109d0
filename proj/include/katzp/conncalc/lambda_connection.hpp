#pragma once

#include "katzp/conncalc/connection.hpp"

namespace katzp {

/// Scale of a lambda-connection: either a constant of F_p, or `value` times
/// a formal parameter.
struct LambdaScale {
  FpElement value;
  bool formal = false;

  static LambdaScale constant(FpElement v) { return {v, false}; }
  static LambdaScale formal_parameter(std::uint32_t p) { return {FpElement(1, p), true}; }

  friend bool operator==(const LambdaScale&, const LambdaScale&) = default;
};

/// v -> lambda v' + A v, obeying nabla(f s) = f nabla(s) + lambda f' s.
/// lambda = 1 is a connection; lambda = 0 is a Higgs field.
struct LambdaConnection {
  Poly base_denominator;
  MatrixRF matrix;
  LambdaScale scale;

  static LambdaConnection from_connection(const Connection& c) {
    return {c.base_denominator(), c.matrix(), LambdaScale::constant(FpElement(1, c.characteristic()))};
  }

  std::uint32_t characteristic() const { return matrix.field().characteristic(); }
  std::size_t rank() const { return matrix.rows(); }

  friend bool operator==(const LambdaConnection&, const LambdaConnection&) = default;
};

inline VectorRF lambda_apply(const LambdaConnection& lc, const VectorRF& v) {
  if (lc.scale.formal) fail(ErrorCode::InvalidInput, "formal lambda: use lambda_apply_formal");
  if (v.size() != lc.rank()) fail(ErrorCode::DimensionMismatch, "vector length does not match the rank");
  return RationalFunction::constant(lc.scale.value) * derivative(v) + lc.matrix * v;
}

/// For a formal scale: the coefficient of the parameter and the constant part.
inline std::pair<VectorRF, VectorRF> lambda_apply_formal(const LambdaConnection& lc, const VectorRF& v) {
  if (v.size() != lc.rank()) fail(ErrorCode::DimensionMismatch, "vector length does not match the rank");
  return {RationalFunction::constant(lc.scale.value) * derivative(v), lc.matrix * v};
}

/// The G_m action: (lambda, A) -> (u lambda, u A).
inline LambdaConnection lambda_rescale(const LambdaConnection& lc, const FpElement& u) {
  if (u.is_zero()) fail(ErrorCode::ZeroScale, "rescaling by zero");
  LambdaConnection out = lc;
  out.scale.value = lc.scale.value * u;
  out.matrix = RationalFunction::constant(u) * lc.matrix;
  return out;
}

}  // namespace katzp
