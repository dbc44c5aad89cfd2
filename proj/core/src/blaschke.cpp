#include "btop/blaschke.hpp"

#include <algorithm>
#include <cmath>

namespace btop {

namespace {
constexpr double kStructTol = 1e-12;  // projection/unitary input validation
}

Cplx blaschkeValue(Cplx alpha, Cplx z) {
  return (z - alpha) / (1.0 - std::conj(alpha) * z);
}

BlaschkeFactor::BlaschkeFactor(Cplx a, CMat p) : alpha(a), projection(std::move(p)) {
  if (std::abs(alpha) >= 1.0)
    throw PreconditionError("Blaschke factor zero must satisfy |alpha| < 1");
  if (!isProjection(projection, kStructTol))
    throw PreconditionError("factor P must be a Hermitian projection");
}

int BlaschkeFactor::rank() const {
  return static_cast<int>(std::lround(projection.real().trace()));
}

CMat BlaschkeFactor::valueAt(Cplx z) const {
  int n = dim();
  return blaschkeValue(alpha, z) * projection +
         (CMat::Identity(n, n) - projection);
}

PotapovProduct::PotapovProduct(CMat v, std::vector<BlaschkeFactor> factors)
    : v_(std::move(v)), factors_(std::move(factors)) {
  if (!isUnitary(v_, kStructTol))
    throw PreconditionError("leading factor v must be unitary");
  for (const auto& f : factors_)
    if (f.dim() != dim())
      throw PreconditionError("factor dimension mismatch in Potapov product");
}

PotapovProduct PotapovProduct::constantUnitary(CMat v) {
  return PotapovProduct(std::move(v), {});
}

PotapovProduct PotapovProduct::scalarMonomial(int n, int degree) {
  std::vector<BlaschkeFactor> fs(
      static_cast<size_t>(degree),
      BlaschkeFactor(Cplx(0, 0), CMat::Identity(n, n)));
  return PotapovProduct(CMat::Identity(n, n), std::move(fs));
}

CMat PotapovProduct::valueAt(Cplx z) const {
  if (std::abs(z) > 1.0 + 1e-12)
    throw PreconditionError("Potapov products are evaluated on the closed disc");
  CMat acc = v_;
  for (const auto& f : factors_) acc = acc * f.valueAt(z);
  return acc;
}

double PotapovProduct::maxAlphaModulus() const {
  double r = 0.0;
  for (const auto& f : factors_) r = std::max(r, std::abs(f.alpha));
  return r;
}

int PotapovProduct::modelSpaceDim() const {
  int d = 0;
  for (const auto& f : factors_) d += f.rank();
  return d;
}

// Taylor coefficients of one factor: c0 = -alpha P + (I-P),
// ck = (1-|alpha|^2) conj(alpha)^{k-1} P.
static CMat factorCoeff(const BlaschkeFactor& f, int k) {
  int n = f.dim();
  if (k == 0)
    return CMat(-f.alpha * f.projection +
                (CMat::Identity(n, n) - f.projection));
  double w = 1.0 - std::norm(f.alpha);
  return CMat(w * std::pow(std::conj(f.alpha), k - 1) * f.projection);
}

PotapovProduct::Fourier PotapovProduct::fourier(int order) const {
  if (order < 1) throw PreconditionError("fourier order must be >= 1");
  int n = dim();
  // Truncated Cauchy products keep coefficients below `order` exact.
  std::vector<CMat> acc(static_cast<size_t>(order), CMat::Zero(n, n));
  acc[0] = v_;
  for (const auto& f : factors_) {
    std::vector<CMat> next(static_cast<size_t>(order), CMat::Zero(n, n));
    for (int i = 0; i < order; ++i) {
      if (acc[i].cwiseAbs().maxCoeff() == 0.0) continue;
      for (int k = 0; i + k < order; ++k) next[i + k] += acc[i] * factorCoeff(f, k);
    }
    acc = std::move(next);
  }
  Fourier out{LaurentSymbol(n), 0.0};
  for (int k = 0; k < order; ++k) out.symbol.setCoeff(k, acc[k]);

  double rho = maxAlphaModulus();
  if (rho == 0.0) {
    // Polynomial of degree <= factor count: dropped mass is exactly zero
    // once order exceeds it, else the finitely many missing coefficients.
    if (order <= factorCount()) {
      auto full = fourier(factorCount() + 1);
      for (int k = order; k <= factorCount(); ++k)
        out.tailBound += full.symbol.coeff(k).operatorNorm();
    }
    return out;
  }
  // Operator-norm majorants a_m(0) <= 1, a_m(k) = (1-rho_m^2) rho_m^{k-1}
  // give ||coeff(k)|| <= conv(a_1,...,a_M)(k) <= prod_m A_m(x) x^{-k} for
  // any x in (1, 1/rho), where A_m(x) = 1 + (1-rho_m^2) x / (1 - rho_m x).
  double x = 0.5 * (1.0 + 1.0 / rho);
  double prod = 1.0;
  for (const auto& f : factors_) {
    double rm = std::abs(f.alpha);
    prod *= 1.0 + (1.0 - rm * rm) * x / (1.0 - rm * x);
  }
  out.tailBound = prod * std::pow(x, 1 - order) / (x - 1.0);
  return out;
}

PotapovProduct PotapovProduct::compose(const PotapovProduct& rhs) const {
  if (rhs.dim() != dim())
    throw PreconditionError("dimension mismatch in Potapov composition");
  // (v1 F..)(v2 G..) = (v1 v2)(v2^* F v2 ..)(G..): pushing v2 left conjugates
  // each projection, b(z)P + (I-P) |-> b(z) v2^*Pv2 + (I - v2^*Pv2).
  std::vector<BlaschkeFactor> fs;
  fs.reserve(factors_.size() + rhs.factors_.size());
  for (const auto& f : factors_)
    fs.emplace_back(f.alpha,
                    CMat(rhs.v_.adjoint() * f.projection * rhs.v_));
  for (const auto& f : rhs.factors_) fs.push_back(f);
  return PotapovProduct(CMat(v_ * rhs.v_), std::move(fs));
}

bool isInner(const LaurentSymbol& theta, double tol, double* defect) {
  LaurentSymbol gram =
      theta.adjoint() * theta - LaurentSymbol::identity(theta.dim());
  double d = std::max(theta.analyticDefect(), gram.maxCoeffNorm());
  if (defect) *defect = d;
  return d <= tol;
}

namespace {

CoprimeResult coprimeCheck(const LaurentSymbol& b, const std::vector<Cplx>& zeros) {
  if (!b.isAnalytic(0.0))
    throw PreconditionError("coprimality requires an analytic symbol");
  for (size_t i = 0; i < zeros.size(); ++i) {
    if (std::abs(zeros[i]) >= 1.0)
      throw PreconditionError("inner-function zeros must lie in the open disc");
    for (size_t j = i + 1; j < zeros.size(); ++j)
      if (std::abs(zeros[i] - zeros[j]) <= 1e-12)
        throw PreconditionError("repeated zeros are not supported");
  }
  int n = b.dim();
  CoprimeResult r;
  r.minScaledDet = std::numeric_limits<double>::infinity();
  for (Cplx a : zeros) {
    CMat e = b.evaluateInDisc(a);
    Eigen::JacobiSVD<CMat> svd(e, Eigen::ComputeFullU);
    double det = svd.singularValues().prod();
    double scale = 1.0 + std::pow(svd.singularValues()(0), n);
    r.minScaledDet = std::min(r.minScaledDet, det / scale);
    if (det <= 1e-8 * scale && r.coprime) {
      r.coprime = false;
      r.witnessPoint = a;
      r.witnessVector = svd.matrixU().col(n - 1);
    }
  }
  if (zeros.empty()) r.minScaledDet = 0.0;
  return r;
}

}  // namespace

CoprimeResult leftCoprimeWithScalarInner(const LaurentSymbol& b,
                                         const std::vector<Cplx>& zeros) {
  return coprimeCheck(b, zeros);
}

CoprimeResult rightCoprimeWithScalarInner(const LaurentSymbol& b,
                                          const std::vector<Cplx>& zeros) {
  std::vector<Cplx> conj;
  conj.reserve(zeros.size());
  for (Cplx a : zeros) conj.push_back(std::conj(a));
  return coprimeCheck(b.tilde(), conj);
}

}  // namespace btop
