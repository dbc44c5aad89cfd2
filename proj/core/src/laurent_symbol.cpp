#include "btop/laurent_symbol.hpp"

#include <cmath>

namespace btop {

namespace {

void checkSquare(const CMat& a, int n) {
  if (a.rows() != n || a.cols() != n)
    throw PreconditionError("coefficient shape mismatch: expected " +
                            std::to_string(n) + "x" + std::to_string(n));
}

BoundedType combine(BoundedType a, BoundedType b) {
  return (a == BoundedType::not_bounded_type_standin ||
          b == BoundedType::not_bounded_type_standin)
             ? BoundedType::not_bounded_type_standin
             : BoundedType::bounded;
}

}  // namespace

LaurentSymbol::LaurentSymbol(int n, BoundedType bt) : n_(n), bounded_type_(bt) {
  if (n <= 0) throw PreconditionError("symbol dimension must be positive");
}

LaurentSymbol LaurentSymbol::zero(int n) { return LaurentSymbol(n); }

LaurentSymbol LaurentSymbol::identity(int n) {
  return constant(CMat::Identity(n, n));
}

LaurentSymbol LaurentSymbol::constant(const CMat& a) {
  return monomial(0, a);
}

LaurentSymbol LaurentSymbol::monomial(int k, const CMat& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw PreconditionError("coefficient must be square and nonempty");
  LaurentSymbol s(static_cast<int>(a.rows()));
  s.setCoeff(k, a);
  return s;
}

LaurentSymbol LaurentSymbol::scalar(const std::map<int, Cplx>& coeffs) {
  LaurentSymbol s(1);
  for (const auto& [k, v] : coeffs) {
    CMat a(1, 1);
    a(0, 0) = v;
    s.setCoeff(k, a);
  }
  return s;
}

CMat LaurentSymbol::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? CMat(CMat::Zero(n_, n_)) : it->second;
}

void LaurentSymbol::setCoeff(int k, const CMat& a) {
  checkSquare(a, n_);
  if (a.cwiseAbs().maxCoeff() == 0.0)
    c_.erase(k);
  else
    c_[k] = a;
}

int LaurentSymbol::minPower() const { return c_.empty() ? 0 : c_.begin()->first; }

int LaurentSymbol::maxPower() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentSymbol LaurentSymbol::operator+(const LaurentSymbol& o) const {
  if (o.n_ != n_) throw PreconditionError("symbol dimension mismatch in +");
  LaurentSymbol r(n_, combine(bounded_type_, o.bounded_type_));
  r.c_ = c_;
  for (const auto& [k, a] : o.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end())
      r.c_[k] = a;
    else {
      it->second += a;
      if (it->second.cwiseAbs().maxCoeff() == 0.0) r.c_.erase(it);
    }
  }
  return r;
}

LaurentSymbol LaurentSymbol::operator-(const LaurentSymbol& o) const {
  return *this + o.scaled(-1.0);
}

LaurentSymbol LaurentSymbol::operator*(const LaurentSymbol& o) const {
  if (o.n_ != n_) throw PreconditionError("symbol dimension mismatch in *");
  LaurentSymbol r(n_, combine(bounded_type_, o.bounded_type_));
  for (const auto& [k1, a] : c_)
    for (const auto& [k2, b] : o.c_) {
      auto it = r.c_.find(k1 + k2);
      if (it == r.c_.end())
        r.c_[k1 + k2] = a * b;
      else
        it->second += a * b;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = (it->second.cwiseAbs().maxCoeff() == 0.0) ? r.c_.erase(it) : std::next(it);
  return r;
}

LaurentSymbol LaurentSymbol::scaled(Cplx s) const {
  LaurentSymbol r(n_, bounded_type_);
  if (s == Cplx(0.0)) return r;
  for (const auto& [k, a] : c_) r.c_[k] = s * a;
  return r;
}

LaurentSymbol LaurentSymbol::adjoint() const {
  LaurentSymbol r(n_, bounded_type_);
  for (const auto& [k, a] : c_) r.c_[-k] = a.adjoint();
  return r;
}

LaurentSymbol LaurentSymbol::breve() const {
  LaurentSymbol r(n_, bounded_type_);
  for (const auto& [k, a] : c_) r.c_[-k] = a;
  return r;
}

LaurentSymbol LaurentSymbol::tilde() const {
  LaurentSymbol r(n_, bounded_type_);
  for (const auto& [k, a] : c_) r.c_[k] = a.adjoint();
  return r;
}

LaurentSymbol LaurentSymbol::conjugate() const {
  LaurentSymbol r(n_, bounded_type_);
  for (const auto& [k, a] : c_) r.c_[-k] = a.conjugate();
  return r;
}

CMat LaurentSymbol::evaluate(Cplx z) const {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw PreconditionError("evaluate requires |z| = 1");
  CMat v = CMat::Zero(n_, n_);
  for (const auto& [k, a] : c_) v += a * std::pow(z, k);
  return v;
}

CMat LaurentSymbol::evaluateInDisc(Cplx z) const {
  if (!isAnalytic(0.0))
    throw PreconditionError("evaluateInDisc requires an analytic symbol");
  if (std::abs(z) > 1.0 + 1e-12)
    throw PreconditionError("evaluateInDisc requires |z| <= 1");
  CMat v = CMat::Zero(n_, n_);
  for (const auto& [k, a] : c_) v += a * std::pow(z, k);
  return v;
}

double LaurentSymbol::analyticDefect() const {
  double d = 0.0;
  for (const auto& [k, a] : c_)
    if (k < 0) d = std::max(d, a.norm());
  return d;
}

double LaurentSymbol::maxCoeffNorm() const {
  double d = 0.0;
  for (const auto& [k, a] : c_) d = std::max(d, a.norm());
  return d;
}

bool LaurentSymbol::approxEqual(const LaurentSymbol& o, double tol) const {
  if (o.n_ != n_) return false;
  LaurentSymbol d = *this - o;
  return d.maxCoeffNorm() <= tol;
}

SymbolSplit split(const LaurentSymbol& phi) {
  SymbolSplit s{LaurentSymbol(phi.dim(), phi.boundedType()),
                LaurentSymbol(phi.dim(), phi.boundedType())};
  for (const auto& [k, a] : phi.coeffs()) {
    if (k >= 0)
      s.plus.setCoeff(k, a);
    else
      s.minus.setCoeff(-k, a.adjoint());
  }
  return s;
}

bool isNormalSymbol(const LaurentSymbol& phi, double tol, double* residual) {
  LaurentSymbol adj = phi.adjoint();
  LaurentSymbol d = adj * phi - phi * adj;
  double r = d.maxCoeffNorm();
  if (residual) *residual = r;
  return r <= tol;
}

}  // namespace btop
