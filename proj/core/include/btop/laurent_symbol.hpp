#pragma once

#include <map>
#include <optional>

#include "btop/types.hpp"

namespace btop {

// Symbols are stored by their finitely many matrix Fourier coefficients, so
// everything here is exact arithmetic on coefficients; no grids involved.
// bounded_type=false marks a finite stand-in for a genuinely unbounded-type
// example.  Operator fills refuse such symbols unless explicitly overridden.
enum class BoundedType { bounded, not_bounded_type_standin };

class LaurentSymbol {
 public:
  explicit LaurentSymbol(int n, BoundedType bt = BoundedType::bounded);

  static LaurentSymbol zero(int n);
  static LaurentSymbol identity(int n);
  static LaurentSymbol constant(const CMat& a);
  static LaurentSymbol monomial(int k, const CMat& a);  // a * z^k
  static LaurentSymbol scalar(const std::map<int, Cplx>& coeffs);

  int dim() const { return n_; }
  BoundedType boundedType() const { return bounded_type_; }
  void setBoundedType(BoundedType bt) { bounded_type_ = bt; }
  bool isStandin() const { return bounded_type_ == BoundedType::not_bounded_type_standin; }

  const std::map<int, CMat>& coeffs() const { return c_; }
  CMat coeff(int k) const;                   // zero matrix when absent
  void setCoeff(int k, const CMat& a);       // exact-zero coefficients are dropped
  bool empty() const { return c_.empty(); }

  int minPower() const;                      // 0 when empty
  int maxPower() const;
  int degMinus() const { return std::max(0, -minPower()); }
  int degPlus() const { return std::max(0, maxPower()); }

  LaurentSymbol operator+(const LaurentSymbol& o) const;
  LaurentSymbol operator-(const LaurentSymbol& o) const;
  LaurentSymbol operator*(const LaurentSymbol& o) const;  // Cauchy product
  LaurentSymbol scaled(Cplx s) const;

  // Coefficient-level transforms.  On |z|=1:
  //   adjoint:   Phi^*(z),      coeff k  ->  coeff(-k)^*
  //   breve:     Phi(1/z),      coeff k  ->  coeff(-k)
  //   tilde:     Phi(conj z)^*, coeff k  ->  coeff(k)^*
  //   conjugate: conj(Phi(z)),  coeff k  ->  conj(coeff(-k))
  LaurentSymbol adjoint() const;
  LaurentSymbol breve() const;
  LaurentSymbol tilde() const;
  LaurentSymbol conjugate() const;

  CMat evaluate(Cplx z) const;        // requires ||z|-1| <= 1e-12
  CMat evaluateInDisc(Cplx z) const;  // requires analytic symbol and |z| <= 1+1e-12

  bool isAnalytic(double tol) const { return analyticDefect() <= tol; }
  double analyticDefect() const;      // max Frobenius norm over k < 0
  double maxCoeffNorm() const;        // max Frobenius norm over all k

  bool approxEqual(const LaurentSymbol& o, double tol) const;

 private:
  int n_;
  BoundedType bounded_type_;
  std::map<int, CMat> c_;
};

// Phi = Phi_-^* + Phi_+ with Phi_+ the analytic part (powers >= 0) and
// Phi_- supported on powers 1..degMinus: Phi_-.coeff(k) = Phi.coeff(-k)^*.
struct SymbolSplit {
  LaurentSymbol plus;
  LaurentSymbol minus;
};

SymbolSplit split(const LaurentSymbol& phi);

// Pointwise normality Phi(z)^* Phi(z) = Phi(z) Phi(z)^*, decided exactly on
// coefficients of Phi^* Phi - Phi Phi^*.  residual receives the max
// coefficient norm of that difference when non-null.
bool isNormalSymbol(const LaurentSymbol& phi, double tol,
                    double* residual = nullptr);

}  // namespace btop
