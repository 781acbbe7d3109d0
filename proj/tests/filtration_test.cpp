#include <gtest/gtest.h>

#include "katzp/filtration.hpp"
#include "katzp/gaussmanin.hpp"

using namespace katzp;

namespace {

Basis unit_vectors(std::uint32_t p, std::size_t n, std::initializer_list<std::size_t> which) {
  const FunctionField fld(p);
  Basis out;
  for (auto i : which) {
    VectorRF e(n, fld.zero());
    e[i] = fld.one();
    out.push_back(e);
  }
  return out;
}

MatrixRF ints(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const FunctionField fld(p);
  std::vector<VectorRF> m;
  for (const auto& r : rows) {
    VectorRF row;
    for (auto x : r) row.push_back(fld.from_int(x));
    m.push_back(row);
  }
  return MatrixRF(fld, m);
}

struct Legendre {
  HyperellipticFamily fam;
  GMConnection gm;
  explicit Legendre(std::uint32_t p) : fam(HyperellipticFamily::legendre(p)), gm(gm_connection(fam)) {}
};

}  // namespace

TEST(CheckGriffiths, TrivialAndCoordinateFiltrations) {
  Rng rng(3);
  const auto conn = random_connection(rng, 5, 2);
  const auto one_step = check_griffiths(FilteredConnection(conn, 0, {unit_vectors(5, 2, {0, 1})}));
  EXPECT_TRUE(one_step.transversal);
  EXPECT_FALSE(one_step.first_failure);

  const auto flat = Connection::trivial(7, 3);
  const FilteredConnection fc(flat, 0, {unit_vectors(7, 3, {0, 1, 2}), unit_vectors(7, 3, {0, 2}),
                                        unit_vectors(7, 3, {2})});
  const auto rep = check_griffiths(fc);
  EXPECT_TRUE(rep.transversal);
  EXPECT_TRUE(rep.stable);
}

TEST(CheckGriffiths, LegendreHodgeFiltrationIsTransversalButNotStable) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Legendre leg(p);
    const auto rep = check_griffiths(hodge_filtration(leg.gm));
    EXPECT_TRUE(rep.transversal) << p;
    EXPECT_FALSE(rep.stable) << p;
  }
}

TEST(CheckGriffiths, ReportsFirstFailure) {
  const std::uint32_t p = 5;
  MatrixRF a(FunctionField(p), 3, 3);
  a(2, 0) = RationalFunction::from_int(p, 1);
  const FilteredConnection fc(Connection::from_matrix(a), 0,
                              {unit_vectors(p, 3, {0, 1, 2}), unit_vectors(p, 3, {0, 1}), unit_vectors(p, 3, {0})});
  const auto rep = check_griffiths(fc);
  EXPECT_FALSE(rep.transversal);
  ASSERT_TRUE(rep.first_failure);
  EXPECT_EQ(rep.first_failure->first, 2);
  try {
    higgs_field(fc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GriffithsViolation);
  }
}

TEST(FilteredConnection, RejectsMalformedFiltrations) {
  const auto conn = Connection::trivial(5, 2);
  EXPECT_THROW(FilteredConnection(conn, 0, {unit_vectors(5, 2, {0})}), Error);
  EXPECT_THROW(FilteredConnection(conn, 0, {unit_vectors(5, 2, {0, 1}), unit_vectors(5, 2, {0, 0})}), Error);
  EXPECT_THROW(FilteredConnection(conn, 0, {unit_vectors(5, 2, {0, 1}), unit_vectors(5, 2, {1}),
                                            unit_vectors(5, 2, {0})}),
               Error);
}

TEST(FilteredConnection, SaturationDefect) {
  const std::uint32_t p = 5;
  const FunctionField fld(p);
  const auto t = RationalFunction::variable(p);
  const auto conn = Connection::trivial(p, 2);
  const FilteredConnection sat(conn, 0, {unit_vectors(p, 2, {0, 1}), {VectorRF{fld.one(), t}}});
  EXPECT_EQ(sat.saturation_defect(1).degree(), 0);
  // (t, t^2 - t) = t (1, t - 1) is saturated after clearing content
  const FilteredConnection scaled(conn, 0, {unit_vectors(p, 2, {0, 1}), {VectorRF{t, t * t - t}}});
  EXPECT_EQ(scaled.saturation_defect(1).degree(), 0);
  const FilteredConnection two(conn, 0, {{VectorRF{fld.one(), t}, VectorRF{fld.one(), t + t * t}}});
  EXPECT_EQ(two.saturation_defect(0), poly_from_ints(p, {0, 0, 1}));
}

TEST(HiggsField, StableFiltrationGivesZero) {
  const std::uint32_t p = 7;
  const auto t = RationalFunction::variable(p);
  MatrixRF a(FunctionField(p), {{t, t * t}, {RationalFunction(p), RationalFunction::from_int(p, 3)}});
  const FilteredConnection fc(Connection::from_matrix(a), 0, {unit_vectors(p, 2, {0, 1}), unit_vectors(p, 2, {0})});
  EXPECT_TRUE(check_griffiths(fc).stable);
  EXPECT_TRUE(higgs_field(fc).is_zero());
}

TEST(HiggsField, NilpotentShift) {
  const std::uint32_t p = 5;
  const FilteredConnection fc(Connection::from_matrix(ints(p, {{0, 0}, {1, 0}})), 0,
                              {unit_vectors(p, 2, {0, 1}), unit_vectors(p, 2, {0})});
  const auto h = higgs_field(fc);
  ASSERT_EQ(h.theta.size(), 1u);
  EXPECT_EQ(h.theta.at(1), ints(p, {{1}}));
  EXPECT_EQ(h.graded_lifts.at(0), unit_vectors(p, 2, {1}));
}

TEST(HiggsField, LegendreMatchesKodairaSpencer) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Legendre leg(p);
    const auto h = higgs_field(hodge_filtration(leg.gm));
    const auto ks = kodaira_spencer(leg.gm);
    EXPECT_EQ(h.theta, ks.theta);
    // gr^1 = dx/y, gr^0 = x dx/y: theta is the (x dx/y)-coordinate of nabla(dx/y)
    EXPECT_EQ(h.theta.at(1)(0, 0), leg.gm.conn.matrix()(1, 0));
    EXPECT_FALSE(h.is_zero());
  }
}

TEST(HiggsField, SuiteProperties) {
  Rng rng(21);
  EXPECT_TRUE(check_higgs_lift_independence(rng, {2, 3, 5, 7}, 40).pass());
  EXPECT_TRUE(check_higgs_linearity(rng, {2, 3, 5, 7}, 40).pass());
}

TEST(Rees, TrivialFiltration) {
  Rng rng(8);
  const auto conn = random_connection(rng, 5, 2);
  const auto rm = rees_build(FilteredConnection(conn, 0, {unit_vectors(5, 2, {0, 1})}));
  EXPECT_EQ(rm.generators().size(), 1u);
  const auto one = rees_fiber(rm, FpElement(1, 5));
  EXPECT_EQ(one.matrix, conn.matrix());
  const auto zero = rees_fiber(rm, FpElement(0, 5));
  EXPECT_TRUE(zero.matrix.is_zero());
  EXPECT_EQ(zero.rank(), conn.rank());
}

TEST(Rees, TwoStepFiberAtZeroIsTheHiggsField) {
  const Legendre leg(5);
  const auto fc = hodge_filtration(leg.gm);
  const auto rm = rees_build(fc);
  ASSERT_EQ(rm.degrees, (std::vector<int>{0, 1}));
  const auto zero = rees_fiber(rm, FpElement(0, 5));
  EXPECT_EQ(zero.matrix(0, 1), higgs_field(fc).theta.at(1)(0, 0));
  EXPECT_TRUE(zero.matrix(0, 0).is_zero());
  EXPECT_TRUE(zero.matrix(1, 1).is_zero());
  EXPECT_TRUE(zero.matrix(1, 0).is_zero());
  EXPECT_EQ(rees_fiber(rm, FpElement(1, 5)).matrix,
            gauge_transform(leg.gm.conn, *try_inverse(rm.frame())).matrix());
}

TEST(Rees, FibersAgreeWithRescalingAndGauge) {
  Rng rng(5);
  const auto r = check_rees_fibers(rng, {2, 3, 5, 7}, 40);
  EXPECT_TRUE(r.pass()) << r.failures;
}

TEST(ConjFiltration, ZeroPCurvatureIsOneStep) {
  const auto cf = conj_filtration(Connection::trivial(5, 3));
  EXPECT_EQ(cf.top(), 0);
  EXPECT_EQ(cf.steps[0].size(), 3u);
  EXPECT_TRUE(graded_p_curvature(cf).is_zero());
}

TEST(ConjFiltration, LegendreKernelFiltration) {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const Legendre leg(p);
    const auto cf = conj_filtration(leg.gm.conn);
    ASSERT_EQ(cf.top(), 1) << p;
    EXPECT_EQ(cf.steps[0].size(), 1u);
    EXPECT_EQ(cf.steps[1].size(), 2u);
    EXPECT_FALSE(cf.psi.matrix.is_zero());
    EXPECT_TRUE((cf.psi.matrix * cf.psi.matrix).is_zero());
    const auto g0 = cf.steps[0];
    EXPECT_TRUE(in_span(g0, nabla_apply(leg.gm.conn, g0[0]), leg.gm.conn.field()));
    EXPECT_TRUE(p_curvature(graded_connection(cf, 0)).matrix.is_zero());
    EXPECT_TRUE(p_curvature(graded_connection(cf, 1)).matrix.is_zero());
    const auto bar = graded_p_curvature(cf);
    ASSERT_EQ(bar.maps.size(), 2u);
    EXPECT_FALSE(bar.maps[1].is_zero());
    EXPECT_EQ(bar.maps[1].rows(), 1u);
  }
}

TEST(ConjFiltration, NonNilpotentPCurvatureIsRejected) {
  try {
    conj_filtration(Connection::from_matrix(ints(3, {{1, 0}, {0, 0}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNilpotent);
  }
}

TEST(ConjFiltration, RandomNilpotentConnections) {
  Rng rng(77);
  const auto r = check_conjugate_filtration(rng, {2, 3, 5, 7}, 40);
  EXPECT_TRUE(r.pass()) << r.failures;
}

TEST(KatzCompare, LegendreRatioIsMinusOne) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Legendre leg(p);
    const auto cf = conj_filtration(leg.gm.conn);
    const auto rep = katz_compare(hodge_filtration(leg.gm), cf, cartier_data(leg.fam, cf));
    EXPECT_EQ(rep.status, "compared");
    EXPECT_TRUE(rep.is_constant) << rep.ratio;
    EXPECT_EQ(rep.ratio, RationalFunction::from_int(p, -1)) << p;
    EXPECT_EQ(rep.sign, -1);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.lhs, -rep.rhs);
  }
}

TEST(KatzCompare, IsotrivialIsVacuous) {
  const auto fam = HyperellipticFamily::isotrivial(5);
  const auto gm = gm_connection(fam);
  EXPECT_TRUE(gm.conn.matrix().is_zero());
  const auto cf = conj_filtration(gm.conn);
  const auto rep = katz_compare(hodge_filtration(gm), cf, cartier_data(fam, cf));
  EXPECT_EQ(rep.status, "both sides zero");
  EXPECT_TRUE(rep.pass);
}

TEST(KatzCompare, ErrorPaths) {
  const auto rank3 = Connection::trivial(5, 3);
  try {
    katz_compare(FilteredConnection(rank3, 0, {unit_vectors(5, 3, {0, 1, 2})}), conj_filtration(rank3),
                 CartierData{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankUnsupported);
  }
  const Legendre leg(5);
  const auto cf = conj_filtration(leg.gm.conn);
  auto cd = cartier_data(leg.fam, cf);
  cd.kappa1(0, 0) = RationalFunction(5);
  try {
    katz_compare(hodge_filtration(leg.gm), cf, cd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateCartier);
  }
}

TEST(FiltrationSuite, AllPropertiesHold) {
  for (const auto& r : run_filtration_suite(25, 4)) EXPECT_TRUE(r.pass()) << r.name;
}
