#pragma once

#include <vector>

#include "katzp/exactcore/matrix.hpp"

namespace katzp {

inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a / gcd(a, b)) * b).monic();
}

/// Scale a vector over F_p(t) to polynomial entries with trivial content,
/// first nonzero entry monic. The zero vector is returned unchanged.
inline VectorRF primitive_part(const VectorRF& v) {
  if (v.empty()) return v;
  const std::uint32_t p = v.front().characteristic();
  Poly den = poly_from_ints(p, {1});
  for (const auto& x : v) den = lcm(den, x.den());
  std::vector<Poly> nums;
  Poly content(PrimeField{p});
  for (const auto& x : v) {
    nums.push_back(x.num() * (den / x.den()));
    content = gcd(content, nums.back());
  }
  if (content.is_zero()) return v;
  FpElement lead(1, p);
  for (auto& n : nums) n = n / content;
  for (const auto& n : nums)
    if (!n.is_zero()) {
      lead = n.leading();
      break;
    }
  VectorRF out;
  out.reserve(nums.size());
  for (auto& n : nums) out.emplace_back(n * lead.inverse());
  return out;
}

/// Fraction-free row echelon form over F_p[t] (Bareiss). Rows are first
/// cleared of denominators; every division performed is exact.
struct PolyEchelon {
  std::vector<std::vector<Poly>> rows;  // first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;
};

inline PolyEchelon fraction_free_echelon(const MatrixRF& a) {
  const std::uint32_t p = a.field().characteristic();
  const PrimeField fp(p);
  std::vector<std::vector<Poly>> m(a.rows(), std::vector<Poly>(a.cols(), Poly(fp)));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Poly den = Poly::constant(fp, fp.one());
    for (std::size_t j = 0; j < a.cols(); ++j) den = lcm(den, a(i, j).den());
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).num() * (den / a(i, j).den());
  }
  std::vector<std::size_t> pivots;
  Poly prev = Poly::constant(fp, fp.one());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c].is_zero()) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).exact_div(prev);
      m[i][c] = Poly(fp);
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel {v : A v = 0} over F_p(t). Vectors have
/// polynomial entries with content 1; one vector per free column.
inline std::vector<VectorRF> mat_kernel(const MatrixRF& a) {
  const FunctionField& fld = a.field();
  const auto ech = fraction_free_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;

  std::vector<VectorRF> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorRF v(a.cols(), fld.zero());
    v[free] = fld.one();
    for (std::size_t k = ech.pivots.size(); k-- > 0;) {
      const std::size_t pc = ech.pivots[k];
      RationalFunction acc = fld.zero();
      for (std::size_t j = pc + 1; j < a.cols(); ++j)
        if (!v[j].is_zero() && !ech.rows[k][j].is_zero()) acc += RationalFunction(ech.rows[k][j]) * v[j];
      v[pc] = -acc / RationalFunction(ech.rows[k][pc]);
    }
    basis.push_back(primitive_part(v));
  }
  return basis;
}

/// Gcd of all maximal minors of the n x k matrix whose columns are `vectors`
/// (entries must be polynomials). A unit means the span is a saturated free
/// submodule over F_p[t]; otherwise its roots are where saturation fails.
inline Poly maximal_minor_gcd(const std::vector<VectorRF>& vectors, std::size_t n) {
  const std::uint32_t p = vectors.empty() ? 2 : vectors.front().front().characteristic();
  const FunctionField fld(p);
  const std::size_t k = vectors.size();
  Poly g(PrimeField{p});
  if (k == 0) return poly_from_ints(p, {1});
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  while (true) {
    MatrixRF sub(fld, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = vectors[j][rows[i]];
    const auto d = determinant(sub);
    g = gcd(g, d.num());
    // next combination of k rows out of n
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return g;
}

}  // namespace katzp
