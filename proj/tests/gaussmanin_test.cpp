#include <gtest/gtest.h>

#include "katzp/filtration.hpp"
#include "katzp/gaussmanin.hpp"

using namespace katzp;

namespace {

const std::vector<std::uint32_t> kOddPrimes{3, 5, 7, 11, 13};

Poly binomial_square_sum(std::uint32_t p) {
  const std::uint32_t m = (p - 1) / 2;
  PascalTable pascal(p, m);
  std::vector<FpElement> c;
  for (std::uint32_t i = 0; i <= m; ++i) c.emplace_back(std::int64_t{pascal(m, i)} * pascal(m, i), p);
  return Poly(PrimeField(p), c);
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

/// #{(x, y) in F_p^2 : y^2 = x(x-1)(x-t0)} + 1, by brute force.
std::uint64_t legendre_point_count(std::uint32_t p, std::uint32_t t0) {
  std::uint64_t n = 1;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      const std::uint64_t lhs = (std::uint64_t{y} * y) % p;
      const std::uint64_t rhs = (std::uint64_t{x} * ((x + p - 1) % p) % p) * ((x + p - t0) % p) % p;
      if (lhs == rhs) ++n;
    }
  return n;
}

}  // namespace

TEST(HyperellipticFamily, Validation) {
  const FunctionField fld(5);
  EXPECT_THROW(HyperellipticFamily("x^3", RFPoly(fld, {fld.zero(), fld.zero(), fld.zero(), fld.one()})), Error);
  EXPECT_THROW(HyperellipticFamily("quartic", RFPoly(fld, {fld.one(), fld.zero(), fld.zero(), fld.zero(), fld.one()})),
               Error);
  EXPECT_THROW(HyperellipticFamily::legendre(2), Error);
  EXPECT_THROW(HyperellipticFamily::named("fermat", 5), Error);
  for (std::uint32_t p : kOddPrimes) EXPECT_EQ(HyperellipticFamily::legendre(p).bad_locus(), poly_from_ints(p, {0, -1, 1}));
  EXPECT_EQ(HyperellipticFamily::isotrivial(7).bad_locus().degree(), 0);
}

TEST(GaussManin, LegendreDenominatorsDividePowersOfBadLocus) {
  for (std::uint32_t p : kOddPrimes) {
    const auto gm = gm_connection(HyperellipticFamily::legendre(p));
    ASSERT_EQ(gm.conn.rank(), 2u);
    EXPECT_EQ(gm.basis_labels, (std::vector<std::string>{"dx/y", "x dx/y"}));
    const Poly bad = poly_from_ints(p, {0, -1, 1});
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(divides_power_of(gm.conn.matrix()(i, j).den(), bad));
  }
}

TEST(GaussManin, IsotrivialFamilyHasZeroConnection) {
  for (std::uint32_t p : kOddPrimes) EXPECT_TRUE(gm_connection(HyperellipticFamily::isotrivial(p)).conn.matrix().is_zero());
}

TEST(GaussManin, CyclicVectorGivesLegendreOperator) {
  for (std::uint32_t p : kOddPrimes) {
    const auto gm = gm_connection(HyperellipticFamily::legendre(p));
    const FunctionField fld(p);
    const auto c = picard_fuchs(gm.conn, {fld.one(), fld.zero()});
    ASSERT_EQ(c.size(), 2u);
    const auto t = RationalFunction::variable(p);
    const auto w = t * (fld.one() - t);  // t(1 - t)
    EXPECT_EQ(-c[1] * w, fld.one() - fld.from_int(2) * t) << p;
    EXPECT_EQ(-c[0] * w, fld.from_int(-1) / fld.from_int(4)) << p;
  }
}

TEST(GaussManin, HassePolynomialSolvesPicardFuchs) {
  // L = t(1-t) d^2 + (1-2t) d - 1/4 from the cyclic vector, applied to H
  for (std::uint32_t p : kOddPrimes) {
    const auto fam = HyperellipticFamily::legendre(p);
    const auto gm = gm_connection(fam);
    const FunctionField fld(p);
    const auto c = picard_fuchs(gm.conn, {fld.one(), fld.zero()});
    const RationalFunction h(hasse_polynomial(fam));
    EXPECT_TRUE((h.derivative().derivative() - c[1] * h.derivative() - c[0] * h).is_zero()) << p;
  }
}

TEST(GaussManin, PCurvatureOfLegendre) {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const auto gm = gm_connection(HyperellipticFamily::legendre(p));
    const auto psi = p_curvature(gm.conn);
    EXPECT_FALSE(psi.matrix.is_zero());
    EXPECT_TRUE((psi.matrix * psi.matrix).is_zero());
    EXPECT_TRUE(horizontality_check(gm.conn, psi).holds);
    EXPECT_EQ(mat_kernel(psi.matrix).size(), 1u);
  }
}

TEST(GaussManin, GenusTwoInvariants) {
  // y^2 = x^5 + t x + 1
  for (std::uint32_t p : {3u, 7u, 11u}) {
    const FunctionField fld(p);
    const auto t = RationalFunction::variable(p);
    const HyperellipticFamily fam("quintic", RFPoly(fld, {fld.one(), t, fld.zero(), fld.zero(), fld.zero(), fld.one()}));
    EXPECT_EQ(fam.genus(), 2);
    const auto gm = gm_connection(fam);
    EXPECT_EQ(gm.conn.rank(), 4u);
    const auto fc = hodge_filtration(gm);
    EXPECT_EQ(fc.step(1).size(), 2u);
    EXPECT_TRUE(check_griffiths(fc).transversal);
    EXPECT_TRUE(horizontality_check(gm.conn, p_curvature(gm.conn)).holds);
    EXPECT_THROW(hasse_polynomial(fam), Error);
  }
}

TEST(HodgeFiltration, Legendre) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto fc = hodge_filtration(gm_connection(HyperellipticFamily::legendre(p)));
    EXPECT_EQ(fc.lo(), 0);
    EXPECT_EQ(fc.hi(), 1);
    EXPECT_EQ(fc.step(1).size(), 1u);
    const auto rep = check_griffiths(fc);
    EXPECT_TRUE(rep.transversal);
    EXPECT_FALSE(rep.stable);
  }
}

TEST(KodairaSpencer, LegendreIsNonzeroWithPolesAtZeroAndOne) {
  const std::uint32_t p = 5;
  const auto ks = kodaira_spencer(gm_connection(HyperellipticFamily::legendre(p)));
  const auto& theta = ks.theta.at(1);
  ASSERT_EQ(theta.rows(), 1u);
  EXPECT_FALSE(theta(0, 0).is_zero());
  EXPECT_TRUE(divides_power_of(theta(0, 0).den(), poly_from_ints(p, {0, -1, 1})));
  EXPECT_GT(theta(0, 0).den().degree(), 0);
  EXPECT_TRUE(kodaira_spencer(gm_connection(HyperellipticFamily::isotrivial(p))).is_zero());
}

TEST(KodairaSpencer, GaugeIndependent) {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t p = std::array{3u, 5u, 7u}[i % 3];
    const auto gm = gm_connection(HyperellipticFamily::legendre(p));
    const auto g = random_gauge(rng, p, 2);
    const auto moved = gauge_transform(gm.conn, g);
    const VectorRF e0 = g.column(0), e1 = g.column(1);
    const FilteredConnection fc(moved, 0, {{e0, e1}, {e0}});
    const auto h = higgs_field_with_lifts(fc, {{1, {e0}}, {0, {e1}}});
    EXPECT_EQ(h.theta.at(1), kodaira_spencer(gm).theta.at(1));
    // with the default lifts, theta changes by the graded change of basis only
    EXPECT_FALSE(higgs_field(fc).is_zero());
  }
}

TEST(HassePolynomial, LegendreAtThree) {
  EXPECT_EQ(hasse_polynomial(HyperellipticFamily::legendre(3)), poly_from_ints(3, {-1, -1}));
  EXPECT_EQ(legendre_point_count(3, 2), 4u);  // p + 1: supersingular
}

TEST(HassePolynomial, MatchesBinomialSumAndDegree) {
  for (std::uint32_t p : kOddPrimes) {
    const Poly h = hasse_polynomial(HyperellipticFamily::legendre(p));
    EXPECT_EQ(h.degree(), static_cast<int>((p - 1) / 2));
    EXPECT_TRUE(proportional(h, binomial_square_sum(p))) << p;
    EXPECT_FALSE(h.evaluate(FpElement(0, p)).is_zero());
  }
}

TEST(HassePolynomial, TraceOfFrobeniusCongruence) {
  // a_p = p + 1 - #E is congruent to H(t0) mod p
  for (std::uint32_t p : kOddPrimes) {
    const Poly h = hasse_polynomial(HyperellipticFamily::legendre(p));
    for (std::uint32_t t0 = 2; t0 < p; ++t0) {
      const auto n = static_cast<std::int64_t>(legendre_point_count(p, t0));
      const FpElement ap(static_cast<std::int64_t>(p) + 1 - n, p);
      EXPECT_EQ(ap, h.evaluate(FpElement(t0, p))) << p << " " << t0;
    }
  }
}

TEST(HassePolynomial, LambdaSymmetries) {
  for (std::uint32_t p : kOddPrimes) {
    const Poly h = hasse_polynomial(HyperellipticFamily::legendre(p));
    const Poly one_minus = h.compose(poly_from_ints(p, {1, -1}));
    EXPECT_TRUE(proportional(one_minus, h)) << p;
    // t^m H(1/t): reverse the coefficients
    std::vector<FpElement> rev(h.coeffs().rbegin(), h.coeffs().rend());
    EXPECT_TRUE(proportional(Poly(PrimeField(p), rev), h)) << p;
  }
}

TEST(Cartier, DxOverYIsHasseProportional) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto fam = HyperellipticFamily::legendre(p);
    EXPECT_EQ(cartier_coefficient(fam, 0), RationalFunction(hasse_polynomial(fam)));
  }
}

TEST(Cartier, KappaInvertibleAwayFromHasseRoots) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto fam = HyperellipticFamily::legendre(p);
    const auto cf = conj_filtration(gm_connection(fam).conn);
    const auto cd = cartier_data(fam, cf);
    ASSERT_EQ(cd.kappa0.rows(), 1u);
    EXPECT_FALSE(determinant(cd.kappa0).is_zero());
    EXPECT_FALSE(determinant(cd.kappa1).is_zero());
    const Poly h = hasse_polynomial(fam);
    EXPECT_TRUE(divides_power_of(h, cd.excluded_locus));
    for (std::uint32_t t0 = 0; t0 < p; ++t0) {
      const FpElement x(t0, p);
      if (cd.excluded_locus.evaluate(x).is_zero()) {
        EXPECT_THROW(cartier_specialize(cd, x), Error);
      } else {
        const auto fib = cartier_specialize(cd, x);
        EXPECT_FALSE(fib.kappa0.is_zero());
      }
    }
  }
}

TEST(Cartier, SupersingularFiberDegenerates) {
  const auto fam = HyperellipticFamily::legendre(3);
  const auto cd = cartier_data(fam, conj_filtration(gm_connection(fam).conn));
  try {
    cartier_specialize(cd, FpElement(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateCartier);
  }
}

TEST(Cartier, RejectsUnsupportedShapes) {
  const FunctionField fld(5);
  const auto t = RationalFunction::variable(5);
  const HyperellipticFamily scaled("scaled", RFPoly(fld, {fld.zero(), fld.one(), fld.zero(), t}));
  const auto cf = conj_filtration(gm_connection(scaled).conn);
  try {
    cartier_data(scaled, cf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedFamily);
  }
}
