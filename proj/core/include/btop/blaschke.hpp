#pragma once

#include <vector>

#include "btop/laurent_symbol.hpp"

namespace btop {

// Scalar Blaschke factor b_a(z) = (z - a) / (1 - conj(a) z), |a| < 1.
Cplx blaschkeValue(Cplx alpha, Cplx z);

// Matrix degree-one factor  b_a(z) P + (I - P)  with P a Hermitian projection.
struct BlaschkeFactor {
  Cplx alpha;
  CMat projection;

  BlaschkeFactor(Cplx alpha, CMat projection);  // validates |alpha| < 1, P = P* = P^2

  int dim() const { return static_cast<int>(projection.rows()); }
  int rank() const;  // rank of P (trace, rounded)
  CMat valueAt(Cplx z) const;
};

// Finite Blaschke-Potapov product  Q(z) = v * F_1(z) * ... * F_M(z)
// with v a constant unitary.  Always inner; analytic on the closed disc.
class PotapovProduct {
 public:
  PotapovProduct(CMat v, std::vector<BlaschkeFactor> factors);
  static PotapovProduct constantUnitary(CMat v);
  static PotapovProduct scalarMonomial(int n, int degree);  // z^degree * I_n

  int dim() const { return static_cast<int>(v_.rows()); }
  int factorCount() const { return static_cast<int>(factors_.size()); }
  const CMat& leading() const { return v_; }
  const std::vector<BlaschkeFactor>& factors() const { return factors_; }

  CMat valueAt(Cplx z) const;  // requires |z| <= 1 + 1e-12
  double maxAlphaModulus() const;
  bool isPolynomial() const { return maxAlphaModulus() == 0.0; }

  // Taylor coefficients 0..order-1 as an analytic symbol, plus a certified
  // bound on the total operator-norm mass of all dropped coefficients.
  // The bound is exactly 0 for polynomial products once order > factorCount.
  struct Fourier {
    LaurentSymbol symbol;
    double tailBound;
  };
  Fourier fourier(int order) const;

  // dim H(Q) = sum of factor ranks; the leading unitary contributes nothing.
  int modelSpaceDim() const;

  // Pointwise product (*this)(z) * rhs(z), renormalised to leading form by
  // conjugating this->factors through rhs's leading unitary.
  PotapovProduct compose(const PotapovProduct& rhs) const;

 private:
  CMat v_;
  std::vector<BlaschkeFactor> factors_;
};

// Coefficient-exact inner test: Theta analytic and Theta^* Theta = I as symbols.
bool isInner(const LaurentSymbol& theta, double tol, double* defect = nullptr);

// Coprimality of an analytic matrix symbol B with the scalar inner function
// whose zero set (all simple) is given.  B and theta are left coprime iff
// B(a) is nonsingular at every zero a of theta; on failure the witness left
// null vector u (u^* B(a) = 0) and the offending point are reported.
struct CoprimeResult {
  bool coprime = true;
  Cplx witnessPoint{0.0, 0.0};
  CVec witnessVector;  // empty when coprime
  double minScaledDet = 0.0;
};

CoprimeResult leftCoprimeWithScalarInner(const LaurentSymbol& b,
                                         const std::vector<Cplx>& zeros);
CoprimeResult rightCoprimeWithScalarInner(const LaurentSymbol& b,
                                          const std::vector<Cplx>& zeros);

}  // namespace btop
