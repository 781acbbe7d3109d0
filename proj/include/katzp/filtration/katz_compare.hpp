#pragma once

#include <string>

#include "katzp/filtration/conjugate.hpp"
#include "katzp/filtration/higgs.hpp"
#include "katzp/gaussmanin/cartier_data.hpp"

namespace katzp {

/// Outcome of comparing psi-bar_1, transported through kappa, against the
/// Frobenius twist of theta_1. Both sides are 1x1 for rank 2.
struct KatzComparison {
  std::string status;  // "compared", "both sides zero", "one side zero"
  RationalFunction lhs, rhs, ratio;
  bool is_constant = false;
  int sign = 0;  // +1 / -1 when the ratio is that constant, else 0
  bool pass = false;
};

inline KatzComparison katz_compare(const FilteredConnection& fc, const ConjFiltered& cf, const CartierData& cd) {
  const std::uint32_t p = fc.connection().characteristic();
  if (fc.connection().rank() != 2 || cf.conn.rank() != 2)
    fail(ErrorCode::RankUnsupported, "comparison implemented for rank 2 only");
  if (fc.hi() - fc.lo() != 1 || fc.step(fc.hi()).size() != 1)
    fail(ErrorCode::RankUnsupported, "comparison needs a two-step Hodge filtration with rank-1 pieces");
  if (cf.top() > 1) fail(ErrorCode::RankUnsupported, "conjugate filtration has more than two steps");

  KatzComparison out{"", RationalFunction(p), RationalFunction(p), RationalFunction(p), false, 0, false};
  const HiggsField theta = higgs_field(fc);
  const GradedPCurv psibar = graded_p_curvature(cf);
  const bool theta_zero = theta.is_zero();
  const bool psi_zero = psibar.is_zero();
  if (theta_zero && psi_zero) {
    out.status = "both sides zero";
    out.ratio = RationalFunction::from_int(p, 1);
    out.is_constant = true;
    out.pass = true;
    return out;
  }
  if (theta_zero != psi_zero) {
    out.status = "one side zero";
    if (!theta_zero) out.rhs = theta.theta.at(fc.hi())(0, 0).frobenius_twist();
    return out;
  }

  if (cd.kappa0.rows() != 1 || cd.kappa0.cols() != 1 || cd.kappa1.rows() != 1 || cd.kappa1.cols() != 1)
    fail(ErrorCode::DegenerateCartier, "kappa matrices must be 1x1");
  if (cd.kappa0(0, 0).is_zero() || cd.kappa1(0, 0).is_zero())
    fail(ErrorCode::DegenerateCartier, "kappa is not invertible over the function field");
  if (cf.steps.at(0) != Basis{cd.conj_kernel} || cf.graded_lifts.at(1) != Basis{cd.conj_lift})
    fail(ErrorCode::InvalidInput, "Cartier data was computed against different conjugate bases");

  out.status = "compared";
  out.lhs = cd.kappa0(0, 0) * psibar.maps.at(1)(0, 0) / cd.kappa1(0, 0);
  out.rhs = theta.theta.at(fc.hi())(0, 0).frobenius_twist();
  out.ratio = out.lhs / out.rhs;
  out.is_constant = out.ratio.is_constant();
  if (out.is_constant) {
    if (out.ratio == RationalFunction::from_int(p, 1)) out.sign = 1;
    if (out.ratio == RationalFunction::from_int(p, -1)) out.sign = -1;
  }
  out.pass = out.sign == -1;
  return out;
}

}  // namespace katzp
