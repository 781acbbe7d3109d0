#pragma once

#include <string>
#include <vector>

#include "katzp/exactcore/matrix.hpp"

namespace katzp {

/// Identifications of the conjugate graded pieces with Frobenius twists of
/// the Hodge graded pieces, pinned to explicit bases:
///   kappa1 : gr_1^conj (basis conj_lift) -> F* gr^1 (basis F*(dx/y))
///   kappa0 : G_0 (basis conj_kernel)      -> F* gr^0 (basis F*(x dx/y))
struct CartierData {
  std::uint32_t p = 0;
  VectorRF cartier_row;    // relative Cartier of x^j dx/y, as a multiple of F*(dx/y)
  RationalFunction hasse;  // Hasse-Witt invariant on H^1(O)
  MatrixRF kappa0, kappa1;
  VectorRF conj_kernel;    // basis of G_0 used for kappa0
  VectorRF conj_lift;      // lift of the gr_1 basis used for kappa1
  Poly excluded_locus;     // kappa is invertible away from the roots of this polynomial
  std::vector<std::string> notes;
};

}  // namespace katzp
