#include "btop/generator.hpp"

#include <cmath>
#include <numbers>

namespace btop {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int Rng::integer(int lo, int hi) {
  if (hi < lo) throw PreconditionError("empty integer range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Cplx Rng::unitModulus() {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

Cplx Rng::inDisc(double radius) {
  for (;;) {
    double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
    if (x * x + y * y <= 1.0) return radius * Cplx(x, y);
  }
}

CMat randomUnitary(Rng& rng, int n) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.inDisc(1.0);
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Cplx d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Cplx(1.0, 0.0);
  }
  return q;
}

CMat randomProjection(Rng& rng, int n, int rank) {
  if (rank < 0 || rank > n) throw PreconditionError("projection rank out of range");
  CMat u = randomUnitary(rng, n);
  return u.leftCols(rank) * u.leftCols(rank).adjoint();
}

LaurentSymbol randomSymbol(Rng& rng, int n, int degMinus, int degPlus,
                           double radius) {
  LaurentSymbol s(n);
  for (int k = -degMinus; k <= degPlus; ++k) {
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.inDisc(radius);
    s.setCoeff(k, a);
  }
  return s;
}

LaurentSymbol randomNormalSymbol(Rng& rng, int n, int degMinus, int degPlus) {
  CMat u = randomUnitary(rng, n);
  LaurentSymbol s(n);
  for (int k = -degMinus; k <= degPlus; ++k) {
    CVec lambda(n);
    for (int i = 0; i < n; ++i) lambda(i) = rng.inDisc(1.0);
    s.setCoeff(k, u * lambda.asDiagonal() * u.adjoint());
  }
  return s;
}

PotapovProduct randomPotapov(Rng& rng, int n, int factors, double alphaRadius) {
  CMat v = randomUnitary(rng, n);
  std::vector<BlaschkeFactor> fs;
  for (int m = 0; m < factors; ++m) {
    Cplx alpha = alphaRadius > 0.0 ? rng.inDisc(alphaRadius) : Cplx(0.0, 0.0);
    int rank = rng.integer(1, n);
    fs.emplace_back(alpha, randomProjection(rng, n, rank));
  }
  return PotapovProduct(std::move(v), std::move(fs));
}

InnerSymmetricInstance innerSymmetricInstance(Rng& rng, int n, int factors,
                                              int analyticDegree) {
  PotapovProduct q = randomPotapov(rng, n, factors, 0.0);
  LaurentSymbol qSym = q.fourier(q.factorCount() + 1).symbol;

  LaurentSymbol g = LaurentSymbol::constant(
      CMat::Identity(n, n) * rng.inDisc(1.0));
  g = g + qSym.scaled(rng.inDisc(1.0));
  g = g + (qSym * qSym).scaled(rng.inDisc(1.0));
  for (int i = 1; i <= analyticDegree; ++i)
    g = g + LaurentSymbol::monomial(i, CMat::Identity(n, n) * rng.inDisc(1.0));

  InnerSymmetricInstance inst{g + qSym * g.adjoint(), std::move(q),
                              std::move(qSym)};
  return inst;
}

}  // namespace btop
