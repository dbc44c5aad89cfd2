#include "btop/blaschke.hpp"

#include <gtest/gtest.h>

#include "btop/generator.hpp"
#include "oracle_helpers.hpp"

using namespace btop;
using btop_test::dftCoeff;

namespace {

PotapovProduct scalarFactor(Cplx alpha) {
  return PotapovProduct(CMat::Identity(1, 1),
                        {BlaschkeFactor(alpha, CMat::Identity(1, 1))});
}

TEST(Blaschke, ScalarFactorFrozenCoefficients) {
  // b_{1/2}(z) = (z - 1/2)/(1 - z/2) = -1/2 + (3/4) z + (3/8) z^2 + (3/16) z^3 + ...
  auto f = scalarFactor(Cplx(0.5, 0.0)).fourier(6);
  EXPECT_NEAR(f.symbol.coeff(0)(0, 0).real(), -0.5, 1e-15);
  EXPECT_NEAR(f.symbol.coeff(1)(0, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(f.symbol.coeff(2)(0, 0).real(), 0.375, 1e-15);
  EXPECT_NEAR(f.symbol.coeff(3)(0, 0).real(), 0.1875, 1e-15);

  // Dropped operator-norm mass is exactly (3/4) sum_{j>=6} (1/2)^{j-1}
  // = (3/4)(1/2)^4.  The certified bound must dominate it (it is loose: a
  // geometric majorant evaluated between 1 and 1/|alpha|), and it must
  // itself decay geometrically in the order.
  double exactTail = 0.75 * std::pow(0.5, 4.0);
  EXPECT_GE(f.tailBound, exactTail);

  auto f12 = scalarFactor(Cplx(0.5, 0.0)).fourier(12);
  EXPECT_GE(f12.tailBound, 0.75 * std::pow(0.5, 10.0));
  EXPECT_LT(f12.tailBound, 0.1 * f.tailBound);
  EXPECT_LT(scalarFactor(Cplx(0.5, 0.0)).fourier(60).tailBound, 1e-6);
}

TEST(Blaschke, FactorValidation) {
  EXPECT_THROW(BlaschkeFactor(Cplx(1.0, 0.0), CMat::Identity(1, 1)),
               PreconditionError);
  CMat notProj(2, 2);
  notProj << 1, 1, 0, 0;
  EXPECT_THROW(BlaschkeFactor(Cplx(0.0, 0.0), notProj), PreconditionError);
  CMat notUnitary = 2.0 * CMat::Identity(2, 2);
  EXPECT_THROW(PotapovProduct::constantUnitary(notUnitary), PreconditionError);
}

TEST(Blaschke, ValueIsUnitaryOnCircle) {
  Rng rng(23);
  PotapovProduct q = randomPotapov(rng, 3, 3, 0.7);
  for (int m = 0; m < 12; ++m) {
    double t = 2.0 * std::numbers::pi * m / 12;
    CMat v = q.valueAt(Cplx(std::cos(t), std::sin(t)));
    EXPECT_TRUE(isUnitary(v, 1e-12));
  }
  EXPECT_THROW(q.valueAt(Cplx(1.5, 0.0)), PreconditionError);
}

TEST(Blaschke, FourierMatchesGridWithinTail) {
  Rng rng(5);
  PotapovProduct q = randomPotapov(rng, 2, 2, 0.6);
  auto f = q.fourier(48);
  auto eval = [&](Cplx z) { return q.valueAt(z); };
  for (int k = 0; k < 6; ++k) {
    CMat want = dftCoeff(eval, 2, 512, k);
    // DFT of the true function vs stored truncation: aliasing error is
    // bounded by the certified dropped mass.
    EXPECT_LT((f.symbol.coeff(k) - want).cwiseAbs().maxCoeff(),
              f.tailBound + 1e-12);
  }
}

TEST(Blaschke, PolynomialProductsAreExactlyInner) {
  Rng rng(11);
  PotapovProduct q = randomPotapov(rng, 2, 3, 0.0);
  EXPECT_TRUE(q.isPolynomial());
  auto f = q.fourier(q.factorCount() + 1);
  EXPECT_EQ(f.tailBound, 0.0);
  double defect = 0;
  EXPECT_TRUE(isInner(f.symbol, 1e-13, &defect));
  EXPECT_LT(defect, 1e-13);
}

TEST(Blaschke, ScalarMonomial) {
  PotapovProduct q = PotapovProduct::scalarMonomial(2, 3);
  EXPECT_EQ(q.modelSpaceDim(), 6);
  auto f = q.fourier(5);
  EXPECT_EQ(f.tailBound, 0.0);
  EXPECT_LT((f.symbol.coeff(3) - CMat::Identity(2, 2)).norm(), 1e-15);
  EXPECT_EQ(f.symbol.coeffs().size(), 1u);
}

TEST(Blaschke, ComposeMultipliesPointwise) {
  Rng rng(31);
  PotapovProduct a = randomPotapov(rng, 2, 2, 0.5);
  PotapovProduct b = randomPotapov(rng, 2, 1, 0.5);
  PotapovProduct ab = a.compose(b);
  EXPECT_EQ(ab.factorCount(), a.factorCount() + b.factorCount());
  EXPECT_EQ(ab.modelSpaceDim(), a.modelSpaceDim() + b.modelSpaceDim());
  for (int m = 0; m < 8; ++m) {
    double t = 2.0 * std::numbers::pi * m / 8 + 0.1;
    Cplx z(std::cos(t), std::sin(t));
    EXPECT_LT((ab.valueAt(z) - a.valueAt(z) * b.valueAt(z)).norm(), 1e-12);
  }
}

TEST(Blaschke, CoprimalityAgainstScalarInner) {
  CMat singularAtZero(2, 2);
  singularAtZero << 1, 0, 0, 0;
  CoprimeResult bad = leftCoprimeWithScalarInner(
      LaurentSymbol::constant(singularAtZero), {Cplx(0.0, 0.0)});
  EXPECT_FALSE(bad.coprime);
  EXPECT_EQ(bad.witnessPoint, Cplx(0.0, 0.0));
  // Left null vector of B(0): u = (0, 1) up to phase.
  ASSERT_EQ(bad.witnessVector.size(), 2);
  EXPECT_LT(std::abs(bad.witnessVector(0)), 1e-14);
  EXPECT_NEAR(std::abs(bad.witnessVector(1)), 1.0, 1e-14);

  CoprimeResult good = leftCoprimeWithScalarInner(
      LaurentSymbol::identity(2), {Cplx(0.0, 0.0), Cplx(0.3, 0.2)});
  EXPECT_TRUE(good.coprime);

  EXPECT_THROW(leftCoprimeWithScalarInner(LaurentSymbol::identity(2),
                                          {Cplx(0.3, 0.0), Cplx(0.3, 0.0)}),
               PreconditionError);
}

TEST(Blaschke, RightCoprimalityWitnessSide) {
  // B(0) = [[0,1],[0,0]]: the left witness u has u^* B(0) = 0, the right
  // witness v has B(0) v = 0; they point along different axes here.
  CMat b0(2, 2);
  b0 << 0, 1, 0, 0;
  LaurentSymbol b = LaurentSymbol::constant(b0) +
                    LaurentSymbol::monomial(1, CMat::Identity(2, 2));
  CoprimeResult left = leftCoprimeWithScalarInner(b, {Cplx(0.0, 0.0)});
  CoprimeResult right = rightCoprimeWithScalarInner(b, {Cplx(0.0, 0.0)});
  EXPECT_FALSE(left.coprime);
  EXPECT_FALSE(right.coprime);
  ASSERT_EQ(left.witnessVector.size(), 2);
  ASSERT_EQ(right.witnessVector.size(), 2);
  EXPECT_LT((left.witnessVector.adjoint() * b0).norm(), 1e-13);
  EXPECT_LT((b0 * right.witnessVector).norm(), 1e-13);
}

}  // namespace
