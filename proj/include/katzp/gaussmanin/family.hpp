#pragma once

#include <string>
#include <utility>

#include "katzp/exactcore/kernel.hpp"
#include "katzp/exactcore/rational_function.hpp"

namespace katzp {

/// Sylvester-matrix resultant over F_p(t), using the actual degrees.
inline RationalFunction resultant(const RFPoly& a, const RFPoly& b) {
  const FunctionField& fld = a.field();
  if (a.is_zero() || b.is_zero()) return fld.zero();
  const auto m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
  if (m + n == 0) return fld.one();
  MatrixRF s(fld, m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b.coeff(n - k);
  return determinant(s);
}

/// Product of the distinct irreducible factors of g when g is not a p-th
/// power; otherwise g itself (either way g divides a power of the result).
inline Poly reduced_locus(const Poly& g) {
  if (g.degree() <= 0) return poly_from_ints(g.field().characteristic(), {1});
  const Poly d = g.derivative();
  if (d.is_zero()) return g.monic();
  Poly r = g / gcd(g, d);
  // factors whose multiplicity is divisible by p were dropped above
  Poly rest = g;
  while (true) {
    const Poly c = gcd(rest, r);
    if (c.degree() <= 0) break;
    rest = rest / c;
  }
  if (rest.degree() > 0) r = r * reduced_locus(rest);
  return r.monic();
}

/// Pencil y^2 = f(x; t) of genus g over F_p(t), f of odd degree 2g+1 and
/// squarefree over the function field. The base is F_p[t, 1/bad_locus].
class HyperellipticFamily {
 public:
  HyperellipticFamily(std::string id, RFPoly f) : id_(std::move(id)), f_(std::move(f)) {
    p_ = f_.field().characteristic();
    if (p_ < 3) fail(ErrorCode::InvalidInput, "hyperelliptic pencils need p >= 3");
    const int n = f_.degree();
    if (n < 3 || n % 2 == 0) fail(ErrorCode::InvalidInput, "f must have odd degree >= 3");
    genus_ = (n - 1) / 2;
    const RationalFunction disc = resultant(f_, f_.derivative());
    if (disc.is_zero()) fail(ErrorCode::InvalidInput, "f is not squarefree over F_p(t)");
    Poly bad = disc.num() * disc.den() * f_.leading().num();
    for (const auto& c : f_.coeffs()) bad = bad * c.den();
    bad_ = reduced_locus(bad);
  }

  static HyperellipticFamily legendre(std::uint32_t p) {
    const FunctionField fld(p);
    const auto t = RationalFunction::variable(p);
    // x(x-1)(x-t) = x^3 - (1+t) x^2 + t x
    return HyperellipticFamily("legendre", RFPoly(fld, {fld.zero(), t, -(fld.one() + t), fld.one()}));
  }

  /// y^2 = x^3 - x, constant in t.
  static HyperellipticFamily isotrivial(std::uint32_t p) {
    const FunctionField fld(p);
    return HyperellipticFamily("isotrivial", RFPoly(fld, {fld.zero(), fld.from_int(-1), fld.zero(), fld.one()}));
  }

  static HyperellipticFamily named(const std::string& name, std::uint32_t p) {
    if (name == "legendre") return legendre(p);
    if (name == "isotrivial") return isotrivial(p);
    fail(ErrorCode::UnsupportedFamily, "unknown family '" + name + "'");
  }

  const std::string& id() const { return id_; }
  std::uint32_t characteristic() const { return p_; }
  int genus() const { return genus_; }
  const RFPoly& f() const { return f_; }
  /// d f / d t, coefficientwise.
  RFPoly f_t() const { return f_.map_coeffs([](const RationalFunction& c) { return c.derivative(); }); }
  const Poly& bad_locus() const { return bad_; }

 private:
  std::string id_;
  RFPoly f_;
  std::uint32_t p_ = 0;
  int genus_ = 0;
  Poly bad_;
};

}  // namespace katzp
