#pragma once

#include <cstdint>
#include <random>

#include "btop/blaschke.hpp"

namespace btop {

// Deterministic across platforms: mt19937_64 with explicit 53-bit doubles,
// no distribution objects from <random> (their output is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  Cplx unitModulus();
  Cplx inDisc(double radius);

 private:
  std::mt19937_64 engine_;
};

CMat randomUnitary(Rng& rng, int n);
CMat randomProjection(Rng& rng, int n, int rank);

// Dense coefficients on powers [-degMinus, degPlus], entries in the disc of
// the given radius.
LaurentSymbol randomSymbol(Rng& rng, int n, int degMinus, int degPlus,
                           double radius = 1.0);

// U diag(scalar Laurent polynomials) U^*: pointwise normal by construction.
LaurentSymbol randomNormalSymbol(Rng& rng, int n, int degMinus, int degPlus);

// Potapov product with `factors` random degree-one factors; alphaRadius 0
// gives a matrix polynomial (exact Fourier data).
PotapovProduct randomPotapov(Rng& rng, int n, int factors, double alphaRadius = 0.0);

// Random instance of the fixed-point relation phi = Q phi^*:
// phi = G + Q G^* with G a polynomial in Q plus a scalar analytic
// polynomial, so G commutes with Q and the relation holds exactly.
// Pointwise normal; Q itself certifies hyponormality (multiplier contained
// in the witness field).
struct InnerSymmetricInstance {
  LaurentSymbol phi;
  PotapovProduct q;
  LaurentSymbol multiplier;  // Q as a symbol, exact for polynomial Q
};

InnerSymmetricInstance innerSymmetricInstance(Rng& rng, int n, int factors,
                                              int analyticDegree);

}  // namespace btop
