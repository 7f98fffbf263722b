#include <random>

#include <gtest/gtest.h>

#include "jacsyz/classify.hpp"
#include "jacsyz/families.hpp"
#include "jacsyz/parse.hpp"
#include "jacsyz/primes.hpp"
#include "jacsyz/reduced.hpp"
#include "jacsyz/syzygy.hpp"
#include "test_support.hpp"

namespace jacsyz {
namespace {

using Q = RationalField;
using QJac = JacobianData<Q>;

QJac J(const char* s) { return QJac(parse_poly(s)); }

const char* kNodalCubic = "y^2*z - x^2*(x + z)";
const char* kUninodalQuartic = "x^4 + y^4 + x*y*z^2";

TEST(JacobianMatrix, SmoothConicInDegreeZero) {
  auto jd = J("x^2 + y^2 + z^2");
  auto m = jacobian_matrix(jd, 0);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_TRUE(nullspace_basis(m).empty());
}

TEST(JacobianMatrix, NodalCubicAgainstBruteForce) {
  auto f = parse_poly(kNodalCubic);
  auto jd = QJac(f);
  auto m1 = jacobian_matrix(jd, 1);
  EXPECT_EQ(m1.rows(), 10u);
  EXPECT_EQ(m1.cols(), 9u);
  EXPECT_EQ(testing::brute_force_ar_dim(f, 1), 0u);
  EXPECT_EQ(ar_dim(jd, 1), 0u);
  auto m2 = jacobian_matrix(jd, 2);
  EXPECT_EQ(m2.rows(), 15u);
  EXPECT_EQ(m2.cols(), 18u);
  EXPECT_EQ(testing::brute_force_ar_dim(f, 2), 4u);
  EXPECT_EQ(ar_dim(jd, 2), 4u);
  for (const auto& s : ar_basis(jd, 2)) EXPECT_TRUE(is_syzygy(jd, s));
}

TEST(JacobianMatrix, AllPartialsZeroRejected) { EXPECT_THROW(QJac(parse_poly("7")), DomainError); }

TEST(ArDim, FermatQuartic) {
  auto jd = J("x^4 + y^4 + z^4");
  EXPECT_EQ(ar_dim(jd, 2), 0u);
  EXPECT_EQ(ar_dim(jd, 3), 3u);
}

class RandomCurves : public ::testing::TestWithParam<int> {};

TEST_P(RandomCurves, ArDimMatchesBruteForce) {
  std::mt19937_64 rng(500 + GetParam());
  const int d = 3 + GetParam() % 3;
  auto f = testing::random_poly(rng, Q{}, d, 3);
  if (f.is_zero()) GTEST_SKIP();
  QJac jd(f);
  for (int k = 0; k <= d; ++k) EXPECT_EQ(ar_dim(jd, k), testing::brute_force_ar_dim(f, k)) << k;
}

TEST_P(RandomCurves, ResolutionBookkeepingOverBothFields) {
  std::mt19937_64 rng(600 + GetParam());
  const int d = 3 + GetParam() % 4;
  // a union of a random line arrangement keeps the curve reduced with singular points
  HomogPoly<Q> f = parse_poly("1");
  for (int i = 0; i < d; ++i) {
    auto l = testing::random_poly(rng, Q{}, 1, 4);
    if (l.is_zero()) l = parse_poly("x + 2*y + 3*z");
    f = mul(f, l);
  }
  if (!is_reduced_probabilistic(f)) GTEST_SKIP();
  auto a = analyze(f);
  auto p = analyze(map_to(PrimeField(working_prime(0)), f));
  EXPECT_EQ(a.summary, p.summary);
  EXPECT_TRUE(property_violations(a.summary, a.dims, nullptr).empty());
  EXPECT_TRUE(certificate_violations(f, a).empty());
  QJac jd(f);
  for (int k = 0; k <= a.summary.kmax; ++k) EXPECT_EQ(static_cast<long>(ar_dim(jd, k)), a.dims.ar[k]);
  for (std::size_t k = 0; k < a.dims.milnor.size(); ++k)
    EXPECT_EQ(static_cast<long>(milnor_dim(jd, static_cast<int>(k))), a.dims.milnor[k]);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCurves, ::testing::Range(0, 12));

TEST(Mdr, Examples) {
  EXPECT_EQ(mdr(J("x^5 + y^5 + z^5")), 4);
  EXPECT_EQ(mdr(JacobianData<Q>(triple_point_arrangement(7).poly)), 4);
  EXPECT_EQ(mdr(J("x*y*(x + y)")), 0);
}

TEST(Exponents, Examples) {
  EXPECT_EQ(minimal_exponents(J(kNodalCubic)), (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(minimal_exponents(J(kUninodalQuartic)), (std::vector<int>{3, 3, 3, 4}));
  EXPECT_EQ(minimal_exponents(J("x^5 + y^5 + z^5")), (std::vector<int>{4, 4, 4}));
  EXPECT_EQ(minimal_exponents(J("x*y*z")), (std::vector<int>{1, 1}));
}

TEST(Relations, Examples) {
  auto nodal = J(kNodalCubic);
  auto rn = relation_degrees(nodal, resolve(nodal));
  EXPECT_EQ(rn.degrees, (std::vector<int>{3, 3}));
  EXPECT_EQ(rn.epsilons, (std::vector<int>{1, 1}));
  auto c7 = JacobianData<Q>(triple_point_arrangement(7).poly);
  auto r7 = relation_degrees(c7, resolve(c7));
  // m = 2r-d+3 = 4 generators of degree 4, so m-2 = 2 relations of degree r+1
  EXPECT_EQ(r7.degrees, (std::vector<int>{5, 5}));
  EXPECT_EQ(r7.epsilons, (std::vector<int>{1, 1}));
  auto quartic = J(kUninodalQuartic);
  auto rq = relation_degrees(quartic, resolve(quartic));
  int sum = 0;
  for (int e : rq.epsilons) sum += e;
  EXPECT_EQ(sum, 3 + 3 - 4 + 1);
  auto freec = J("x*y*z");
  EXPECT_THROW(relation_degrees(freec, resolve(freec)), FreeCurve);
}

TEST(MilnorDim, Examples) {
  auto cubic = J("x^3 + y^3 + z^3");
  const std::vector<long> expected{1, 3, 3, 1, 0, 0, 0};
  for (int k = 0; k < 7; ++k) {
    EXPECT_EQ(static_cast<long>(milnor_dim(cubic, k)), expected[k]);
    EXPECT_EQ(smooth_milnor_dim(3, k), expected[k]);
  }
  auto nodal = J(kNodalCubic);
  EXPECT_EQ(milnor_dim(nodal, 0), 1u);
  EXPECT_EQ(milnor_dim(nodal, 10), 1u);
  EXPECT_EQ(milnor_dim(J("x*y*z + x^3"), 0), 1u);
}

TEST(Tjurina, Examples) {
  auto tau_of = [](const HomogPoly<Q>& f) { return analyze(f).summary.tau; };
  EXPECT_EQ(tau_of(nearly_cuspidal_curve(3).poly), 10);
  EXPECT_EQ(tau_of(generic_arrangement(6).poly), 15);
  EXPECT_EQ(tau_of(quadruple_point_arrangement(9).poly), 46);
  EXPECT_EQ(tau_of(parse_poly(kNodalCubic)), 1);
  EXPECT_EQ(tau_of(parse_poly("x^4 + y^4 + z^4")), 0);
}

TEST(Koszul, Examples) {
  auto nodal = J(kNodalCubic);
  EXPECT_EQ(mdr_prime(nodal, 2), 2);
  EXPECT_EQ(koszul_dim(nodal, 2), 3u);
  EXPECT_EQ(koszul_dim(nodal, 1), 0u);
  auto smooth = J("x^4 + y^4 + z^4");
  EXPECT_FALSE(mdr_prime(smooth, 4));
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(koszul_dim(smooth, k), ar_dim(smooth, k));
  auto quartic = J(kUninodalQuartic);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(koszul_dim(quartic, k), 0u);
}

TEST(Thresholds, Examples) {
  auto q = analyze(parse_poly(kUninodalQuartic)).summary;
  EXPECT_EQ(q.ct, 6);
  EXPECT_EQ(q.st, 6);
  auto c7 = analyze(triple_point_arrangement(7).poly).summary;
  EXPECT_EQ(c7.ct, 9);
  EXPECT_EQ(c7.st, 9);
  auto e4 = analyze(two_pencil_arrangement(4).poly).summary;
  EXPECT_EQ(e4.ct, 9);
  EXPECT_EQ(e4.st, 9);
  for (int d = 3; d <= 6; ++d) {
    std::string text = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d);
    auto s = analyze(parse_poly(text)).summary;
    EXPECT_EQ(s.st, 3 * d - 5) << d;
    EXPECT_FALSE(s.ct);
  }
}

TEST(Bourbaki, Examples) {
  auto c7 = analyze(triple_point_arrangement(7).poly);
  ASSERT_TRUE(c7.bourbaki);
  EXPECT_EQ(c7.bourbaki->deg_z, 3);
  auto nodal = analyze(parse_poly(kNodalCubic));
  ASSERT_TRUE(nodal.bourbaki);
  EXPECT_EQ(nodal.bourbaki->deg_z, 3);
  EXPECT_EQ(nodal.bourbaki->predicted, 3);
  auto quartic = analyze(parse_poly(kUninodalQuartic));
  ASSERT_TRUE(quartic.bourbaki);
  EXPECT_EQ(quartic.bourbaki->deg_z, 9 - 0 - 1);
  auto freec = J("x*y*z");
  EXPECT_THROW(bourbaki_degree(freec, resolve(freec), 3), FreeCurve);
  EXPECT_FALSE(analyze(parse_poly("x*y*z")).bourbaki);
}

TEST(Analyze, NonReducedInputIsRejected) {
  EXPECT_THROW(analyze(parse_poly("x^2*y")), StructureError);
  EXPECT_THROW(analyze(parse_poly("(x^2 + y*z)^2")), StructureError);
}

TEST(Analyze, CertificatesHold) {
  for (auto in : {nodal_cubic(), uninodal_quartic(), nearly_cuspidal_curve(4), two_pencil_arrangement(4), triple_point_arrangement(8)}) {
    auto a = analyze(in.poly);
    EXPECT_TRUE(certificate_violations(in.poly, a).empty()) << in.family;
    EXPECT_EQ(a.relations.size(), a.generators.size() - 2) << in.family;
  }
}

TEST(Analyze, KmaxOverrideKeepsTheResult) {
  auto f = parse_poly(kUninodalQuartic);
  AnalysisOptions o;
  o.kmax = 8;
  auto wide = analyze(f, o).summary;
  auto base = analyze(f).summary;
  EXPECT_EQ(wide.exponents, base.exponents);
  EXPECT_EQ(wide.tau, base.tau);
  EXPECT_EQ(wide.kmax, 8);
}

TEST(Analyze, PrimeFieldAgreesWithRationals) {
  for (auto in : {nodal_cubic(), uninodal_quartic(), conic_curve_odd(3), sporadic_curve(8), generic_arrangement(7)}) {
    auto q = analyze(in.poly).summary;
    for (std::size_t i = 0; i < 2; ++i) {
      PrimeField k(working_prime(i));
      EXPECT_EQ(analyze(reduce_input(in, k)).summary, q) << in.family;
    }
  }
}

TEST(ResolutionPolynomial, ConstantForReducedCurves) {
  auto s = analyze(parse_poly(kUninodalQuartic)).summary;
  auto q = resolution_polynomial(s.degree, s.exponents, s.relation_degrees);
  EXPECT_EQ(q.c2, 0);
  EXPECT_EQ(q.c1, 0);
  EXPECT_EQ(q.c0, 2 * s.tau);
}

TEST(Format, SyzygyTriple) {
  auto jd = J("x*y*z");
  auto res = resolve(jd);
  ASSERT_EQ(res.generators.size(), 2u);
  auto text = format(res.generators[0]);
  EXPECT_EQ(text.front(), '(');
  EXPECT_EQ(text.back(), ')');
}

}  // namespace
}  // namespace jacsyz
