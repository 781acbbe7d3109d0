#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "katzp/conncalc/connection.hpp"

namespace katzp {

using Basis = std::vector<VectorRF>;

/// True when v lies in the F_p(t)-span of `basis` (empty basis spans 0).
inline bool in_span(const Basis& basis, const VectorRF& v, const FunctionField& fld) {
  if (basis.empty()) return is_zero(v);
  return solve_in_span(fld, v.size(), basis, v).has_value();
}

/// Pick vectors of `candidates` extending `base` to a basis of their joint span.
inline Basis complement_lifts(const Basis& base, const Basis& candidates, const FunctionField& fld) {
  Basis span = base, chosen;
  for (const auto& v : candidates) {
    if (in_span(span, v, fld)) continue;
    span.push_back(v);
    chosen.push_back(v);
  }
  return chosen;
}

/// Decreasing filtration F^lo = M ⊇ F^{lo+1} ⊇ ... ⊇ F^hi ⊇ F^{hi+1} = 0 on
/// the module of a connection, each step given by a basis of polynomial vectors.
class FilteredConnection {
 public:
  FilteredConnection(Connection conn, int lo, std::vector<Basis> steps)
      : conn_(std::move(conn)), lo_(lo), steps_(std::move(steps)) {
    const auto fld = conn_.field();
    const std::size_t n = conn_.rank();
    if (steps_.empty()) fail(ErrorCode::InvalidInput, "filtration needs at least one step");
    for (const auto& b : steps_)
      for (const auto& v : b)
        if (v.size() != n) fail(ErrorCode::DimensionMismatch, "filtration vector length");
    if (rank_of(steps_.front()) != n) fail(ErrorCode::InvalidInput, "F^lo must be the whole module");
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      if (rank_of(steps_[k]) != steps_[k].size())
        fail(ErrorCode::InvalidInput, "filtration step basis is linearly dependent");
      if (k > 0)
        for (const auto& v : steps_[k])
          if (!in_span(steps_[k - 1], v, fld)) fail(ErrorCode::InvalidInput, "filtration is not decreasing");
    }
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      Basis prev = k + 1 < steps_.size() ? steps_[k + 1] : Basis{};
      lifts_.push_back(complement_lifts(prev, steps_[k], fld));
    }
  }

  const Connection& connection() const { return conn_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(steps_.size()) - 1; }

  /// Basis of F^i (the whole module below lo, empty above hi).
  const Basis& step(int i) const {
    static const Basis empty;
    if (i > hi()) return empty;
    return steps_[static_cast<std::size_t>(std::max(i, lo_) - lo_)];
  }
  /// Lifts to F^i of a basis of gr^i = F^i / F^{i+1}.
  const Basis& graded_lifts(int i) const {
    static const Basis empty;
    if (i < lo_ || i > hi()) return empty;
    return lifts_[static_cast<std::size_t>(i - lo_)];
  }

  /// Roots of the returned polynomial are where F^i fails to be saturated
  /// over F_p[t, 1/s]; a constant means saturated everywhere on the base.
  Poly saturation_defect(int i) const {
    const Basis& b = step(i);
    if (b.empty()) return poly_from_ints(conn_.characteristic(), {1});
    Basis poly_basis;
    for (const auto& v : b) poly_basis.push_back(primitive_part(v));
    Poly g = maximal_minor_gcd(poly_basis, conn_.rank());
    // factors of s are units on the base
    while (true) {
      const Poly common = gcd(g, conn_.base_denominator());
      if (common.degree() <= 0) break;
      g = g / common;
    }
    return g.monic();
  }

 private:
  std::size_t rank_of(const Basis& b) const {
    if (b.empty()) return 0;
    return rank(MatrixRF::from_columns(conn_.field(), conn_.rank(), b));
  }

  Connection conn_;
  int lo_;
  std::vector<Basis> steps_;
  std::vector<Basis> lifts_;
};

struct GriffithsReport {
  bool transversal = true;
  bool stable = true;  // nabla(F^i) ⊆ F^i for every i
  std::optional<std::pair<int, std::size_t>> first_failure;  // (i, basis index)
};

/// nabla(F^i) ⊆ F^{i-1} by an exact membership solve for every basis vector.
inline GriffithsReport check_griffiths(const FilteredConnection& fc) {
  GriffithsReport rep;
  const auto fld = fc.connection().field();
  for (int i = fc.lo() + 1; i <= fc.hi(); ++i) {
    const Basis& fi = fc.step(i);
    for (std::size_t k = 0; k < fi.size(); ++k) {
      const auto image = nabla_apply(fc.connection(), fi[k]);
      if (!in_span(fc.step(i - 1), image, fld)) {
        rep.transversal = false;
        if (!rep.first_failure) rep.first_failure = {i, k};
      }
      if (!in_span(fi, image, fld)) rep.stable = false;
    }
  }
  return rep;
}

}  // namespace katzp
