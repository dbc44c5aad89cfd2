#include "btop/laurent_symbol.hpp"

#include <gtest/gtest.h>

#include "btop/generator.hpp"
#include "oracle_helpers.hpp"

using namespace btop;
using btop_test::dftCoeff;

namespace {

CMat m2(Cplx a, Cplx b, Cplx c, Cplx d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(LaurentSymbol, DegreeBookkeeping) {
  LaurentSymbol s(2);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.degMinus(), 0);
  EXPECT_EQ(s.degPlus(), 0);

  s.setCoeff(-2, m2(1, 0, 0, 0));
  s.setCoeff(3, m2(0, 1, 0, 0));
  EXPECT_EQ(s.minPower(), -2);
  EXPECT_EQ(s.maxPower(), 3);
  EXPECT_EQ(s.degMinus(), 2);
  EXPECT_EQ(s.degPlus(), 3);
  EXPECT_EQ(s.coeff(0).norm(), 0.0);

  s.setCoeff(-2, CMat::Zero(2, 2));
  EXPECT_EQ(s.degMinus(), 0);
  EXPECT_EQ(s.coeffs().size(), 1u);
}

TEST(LaurentSymbol, ShapeMismatchThrows) {
  LaurentSymbol s(2);
  EXPECT_THROW(s.setCoeff(0, CMat::Identity(3, 3)), PreconditionError);
  LaurentSymbol a(2), b(3);
  EXPECT_THROW(a + b, PreconditionError);
  EXPECT_THROW(a * b, PreconditionError);
}

TEST(LaurentSymbol, FrozenSquareOfRealPart) {
  // (z + 1/z)^2 = z^2 + 2 + z^-2.
  LaurentSymbol f = LaurentSymbol::scalar({{1, 1.0}, {-1, 1.0}});
  LaurentSymbol sq = f * f;
  EXPECT_EQ(sq.coeffs().size(), 3u);
  EXPECT_EQ(sq.coeff(2)(0, 0), Cplx(1.0));
  EXPECT_EQ(sq.coeff(0)(0, 0), Cplx(2.0));
  EXPECT_EQ(sq.coeff(-2)(0, 0), Cplx(1.0));
}

TEST(LaurentSymbol, ProductMatchesGridDft) {
  Rng rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    int n = rng.integer(1, 3);
    LaurentSymbol a = randomSymbol(rng, n, rng.integer(0, 3), rng.integer(0, 3));
    LaurentSymbol b = randomSymbol(rng, n, rng.integer(0, 3), rng.integer(0, 3));
    LaurentSymbol p = a * b;
    int grid = 32;
    auto pointwise = [&](Cplx z) { return CMat(a.evaluate(z) * b.evaluate(z)); };
    for (int k = -p.degMinus(); k <= p.degPlus(); ++k) {
      CMat want = dftCoeff(pointwise, n, grid, k);
      EXPECT_LT((p.coeff(k) - want).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(LaurentSymbol, TransformsPointwise) {
  Rng rng(7);
  LaurentSymbol s = randomSymbol(rng, 2, 2, 3);
  for (int m = 0; m < 8; ++m) {
    double t = 2.0 * std::numbers::pi * m / 8 + 0.3;
    Cplx z(std::cos(t), std::sin(t));
    CMat v = s.evaluate(z);
    EXPECT_LT((s.adjoint().evaluate(z) - v.adjoint()).norm(), 1e-13);
    EXPECT_LT((s.breve().evaluate(z) - s.evaluate(std::conj(z))).norm(), 1e-13);
    EXPECT_LT(
        (s.tilde().evaluate(z) - s.evaluate(std::conj(z)).adjoint()).norm(),
        1e-13);
    EXPECT_LT((s.conjugate().evaluate(z) - v.conjugate()).norm(), 1e-13);
  }
  EXPECT_THROW(s.evaluate(Cplx(0.5, 0.0)), PreconditionError);
}

TEST(LaurentSymbol, SplitReassembles) {
  Rng rng(19);
  LaurentSymbol s = randomSymbol(rng, 2, 3, 2);
  SymbolSplit parts = split(s);
  EXPECT_TRUE(parts.plus.isAnalytic(0.0));
  EXPECT_TRUE(parts.minus.isAnalytic(0.0));
  EXPECT_EQ(parts.minus.coeff(0).norm(), 0.0);
  EXPECT_EQ(parts.minus.degPlus(), s.degMinus());
  LaurentSymbol back = parts.minus.adjoint() + parts.plus;
  EXPECT_TRUE(back.approxEqual(s, 0.0));
}

TEST(LaurentSymbol, NormalSymbolDetection) {
  LaurentSymbol sc = LaurentSymbol::scalar({{1, 1.0}, {-1, Cplx(0.3, 0.4)}});
  EXPECT_TRUE(isNormalSymbol(sc, 1e-14));

  LaurentSymbol nilp = LaurentSymbol::constant(m2(0, 1, 0, 0));
  double res = 0;
  EXPECT_FALSE(isNormalSymbol(nilp, 1e-14, &res));
  // N*N - NN* = diag(-1, 1), Frobenius norm sqrt(2).
  EXPECT_NEAR(res, std::sqrt(2.0), 1e-14);

  Rng rng(3);
  EXPECT_TRUE(isNormalSymbol(randomNormalSymbol(rng, 3, 2, 2), 1e-12));
}

TEST(LaurentSymbol, EvaluateInDisc) {
  LaurentSymbol s = LaurentSymbol::scalar({{0, 1.0}, {2, 2.0}});
  CMat v = s.evaluateInDisc(Cplx(0.5, 0.0));
  EXPECT_NEAR(v(0, 0).real(), 1.5, 1e-15);
  LaurentSymbol bad = LaurentSymbol::scalar({{-1, 1.0}});
  EXPECT_THROW(bad.evaluateInDisc(Cplx(0.5, 0.0)), PreconditionError);
  EXPECT_THROW(s.evaluateInDisc(Cplx(2.0, 0.0)), PreconditionError);
}

TEST(LaurentSymbol, MonomialAndConstantFactories) {
  CMat a = m2(1, 2, 3, 4);
  LaurentSymbol mono = LaurentSymbol::monomial(-3, a);
  EXPECT_EQ(mono.minPower(), -3);
  EXPECT_EQ(mono.coeff(-3), a);
  EXPECT_TRUE(LaurentSymbol::identity(2).approxEqual(
      LaurentSymbol::constant(CMat::Identity(2, 2)), 0.0));
}

}  // namespace
