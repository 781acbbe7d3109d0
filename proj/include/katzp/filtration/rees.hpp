#pragma once

#include <vector>

#include "katzp/conncalc/lambda_connection.hpp"
#include "katzp/filtration/higgs.hpp"

namespace katzp {

/// Rees module sum_i lambda^{-i} F^i inside M[lambda, 1/lambda], with the
/// lambda-connection lambda * nabla written in the free basis
/// lambda^{-deg(e)} e over adapted lifts e.
struct ReesModule {
  FilteredConnection filtered;
  Basis adapted_basis;             // graded lifts, lowest degree first
  std::vector<int> degrees;        // filtration degree of each adapted vector
  std::vector<MatrixRF> coefficients;  // coefficients[k]: matrix coefficient of lambda^k

  /// Generators lambda^{-i} * (basis of F^i), as (exponent, vectors).
  std::vector<std::pair<int, Basis>> generators() const {
    std::vector<std::pair<int, Basis>> out;
    for (int i = filtered.lo(); i <= filtered.hi(); ++i) out.emplace_back(-i, filtered.step(i));
    return out;
  }

  MatrixRF frame() const {
    return MatrixRF::from_columns(filtered.connection().field(), filtered.connection().rank(), adapted_basis);
  }
};

inline ReesModule rees_build(const FilteredConnection& fc) {
  if (!check_griffiths(fc).transversal)
    fail(ErrorCode::GriffithsViolation, "Rees lambda-connection needs Griffiths transversality");
  ReesModule rm{fc, {}, {}, {}};
  for (int i = fc.lo(); i <= fc.hi(); ++i)
    for (const auto& v : fc.graded_lifts(i)) {
      rm.adapted_basis.push_back(v);
      rm.degrees.push_back(i);
    }
  const auto& conn = fc.connection();
  const auto fld = conn.field();
  const std::size_t n = conn.rank();
  // matrix of nabla in the adapted frame
  const MatrixRF in_frame = gauge_transform(conn, *try_inverse(rm.frame())).matrix();
  const int span = fc.hi() - fc.lo() + 1;
  rm.coefficients.assign(static_cast<std::size_t>(span) + 1, MatrixRF(fld, n, n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (in_frame(r, c).is_zero()) continue;
      const int e = 1 + rm.degrees[r] - rm.degrees[c];
      if (e < 0) fail(ErrorCode::GriffithsViolation, "negative lambda power in the Rees matrix");
      rm.coefficients[static_cast<std::size_t>(e)](r, c) = in_frame(r, c);
    }
  return rm;
}

/// Specialize the Rees lambda-connection at lambda = u.
inline LambdaConnection rees_fiber(const ReesModule& rm, const FpElement& u) {
  const auto& conn = rm.filtered.connection();
  MatrixRF m(conn.field(), conn.rank(), conn.rank());
  FpElement power(1, u.modulus);
  for (const auto& coeff : rm.coefficients) {
    m = m + RationalFunction::constant(power) * coeff;
    power *= u;
  }
  Poly s = conn.base_denominator();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s = lcm(s, m(i, j).den());
  return {s, std::move(m), LambdaScale::constant(u)};
}

}  // namespace katzp
