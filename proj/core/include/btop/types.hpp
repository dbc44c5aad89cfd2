#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace btop {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Input that could not be interpreted (bad JSON, wrong shapes, duplicate keys).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that parsed fine but violates a mathematical precondition of the
// requested operation (non-inner Q, stand-in symbol without override, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.  Always a bug
// or a tolerance failure, never a property of the input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline double maxAbs(const CMat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool isUnitary(const CMat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  CMat d = u.adjoint() * u - CMat::Identity(u.rows(), u.cols());
  return maxAbs(d) <= tol;
}

// Hermitian projection check: P = P^* = P^2.
inline bool isProjection(const CMat& p, double tol) {
  if (p.rows() != p.cols()) return false;
  return maxAbs(CMat(p - p.adjoint())) <= tol && maxAbs(CMat(p * p - p)) <= tol;
}

}  // namespace btop
