#pragma once

#include "katzp/filtration/conjugate.hpp"
#include "katzp/gaussmanin/cartier_data.hpp"
#include "katzp/gaussmanin/gauss_manin.hpp"

namespace katzp {

/// Coefficient of x^{p-1} in x^j f^{(p-1)/2}: the relative Cartier operator
/// sends x^j dx/y = x^j f^{(p-1)/2} dx / y^p to this multiple of dx/y on the
/// Frobenius-twisted curve.
inline RationalFunction cartier_coefficient(const HyperellipticFamily& fam, std::size_t j) {
  const std::uint32_t p = fam.characteristic();
  const RFPoly h = fam.f().pow((p - 1) / 2);
  return j > p - 1 ? RationalFunction(p) : h.coeff(p - 1 - j);
}

/// H(t) = [x^{p-1}] f^{(p-1)/2}, for genus one with polynomial coefficients.
inline Poly hasse_polynomial(const HyperellipticFamily& fam) {
  if (fam.genus() != 1) fail(ErrorCode::GenusUnsupported, "Hasse polynomial implemented for genus 1");
  const RationalFunction h = cartier_coefficient(fam, 0);
  if (!h.is_polynomial()) fail(ErrorCode::InvalidInput, "f must have polynomial coefficients in t");
  return h.num();
}

/// kappa identifications for genus one, in the bases recorded in the result.
/// A one-step conjugate filtration (psi = 0) yields empty kappas.
inline CartierData cartier_data(const HyperellipticFamily& fam, const ConjFiltered& cf) {
  const std::uint32_t p = fam.characteristic();
  const FunctionField fld(p);
  if (fam.genus() != 1) fail(ErrorCode::GenusUnsupported, "Cartier identifications implemented for genus 1");
  if (!fam.f().leading().derivative().is_zero())
    fail(ErrorCode::UnsupportedFamily, "leading coefficient of f must be constant in t");

  CartierData cd;
  cd.p = p;
  cd.cartier_row = {cartier_coefficient(fam, 0), cartier_coefficient(fam, 1)};
  cd.hasse = cd.cartier_row[0];
  cd.kappa0 = MatrixRF(fld, 0, 0);
  cd.kappa1 = MatrixRF(fld, 0, 0);
  cd.excluded_locus = poly_from_ints(p, {1});
  cd.notes = {
      "kappa1: relative Cartier on gr_1^conj, lift w -> F*(dx/y)",
      "kappa0: inverse Hasse-Witt after projecting G_0 to H/F^1, basis of G_0 -> F*(x dx/y)",
      "psi maps G_i into G_{i-1}",
  };
  if (cf.top() == 0) {
    cd.notes.push_back("p-curvature vanishes: conjugate filtration has one step, kappa not defined");
    return cd;
  }
  if (cf.top() != 1 || cf.steps[0].size() != 1) fail(ErrorCode::RankUnsupported, "expected rank-1 G_0 in rank 2");

  cd.conj_kernel = cf.steps[0][0];
  cd.conj_lift = cf.graded_lifts.at(1).at(0);
  auto apply = [&](const VectorRF& v) { return cd.cartier_row[0] * v[0] + cd.cartier_row[1] * v[1]; };
  if (!apply(cd.conj_kernel).is_zero())
    fail(ErrorCode::PostconditionFailure, "Cartier does not vanish on the kernel of the p-curvature");
  if (cd.hasse.is_zero()) fail(ErrorCode::DegenerateCartier, "Hasse invariant vanishes identically");
  const RationalFunction k1 = apply(cd.conj_lift);
  const RationalFunction k0 = cd.conj_kernel[1] / cd.hasse;
  if (k0.is_zero() || k1.is_zero()) fail(ErrorCode::DegenerateCartier, "kappa is not invertible over F_p(t)");
  cd.kappa0 = MatrixRF(fld, {{k0}});
  cd.kappa1 = MatrixRF(fld, {{k1}});
  Poly locus = cd.hasse.num();
  for (const auto& k : {k0, k1}) locus = lcm(lcm(locus, k.num()), k.den());
  cd.excluded_locus = reduced_locus(locus);
  return cd;
}

struct CartierFiber {
  FpElement kappa0, kappa1;
};

/// kappa at t = t0; supersingular or otherwise excluded parameters raise.
inline CartierFiber cartier_specialize(const CartierData& cd, const FpElement& t0) {
  if (cd.kappa0.rows() != 1 || cd.kappa1.rows() != 1)
    fail(ErrorCode::DegenerateCartier, "kappa not defined for this family");
  const auto h = cd.hasse.evaluate(t0);
  if (!h || h->is_zero())
    fail(ErrorCode::DegenerateCartier, "Hasse invariant vanishes at t = " + std::to_string(t0.value));
  const auto k0 = cd.kappa0(0, 0).evaluate(t0), k1 = cd.kappa1(0, 0).evaluate(t0);
  if (!k0 || !k1 || k0->is_zero() || k1->is_zero())
    fail(ErrorCode::DegenerateCartier, "kappa degenerates at t = " + std::to_string(t0.value));
  return {*k0, *k1};
}

}  // namespace katzp
