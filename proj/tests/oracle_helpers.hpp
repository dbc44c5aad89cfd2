#pragma once

// Re-derivations used as oracles.  Everything here is built straight from
// definitions (index loops, DFT on circle samples), independent of the
// library's fills and windows, so a bug in those cannot cancel out here.

#include <functional>

#include "btop/laurent_symbol.hpp"

namespace btop_test {

using btop::CMat;
using btop::Cplx;
using btop::LaurentSymbol;

// Fourier coefficient k of a matrix function on the circle by plain DFT.
// Exact (to roundoff) for trigonometric symbols once gridSize exceeds the
// total degree spread.
inline CMat dftCoeff(const std::function<CMat(Cplx)>& f, int n, int gridSize,
                     int k) {
  CMat acc = CMat::Zero(n, n);
  for (int m = 0; m < gridSize; ++m) {
    double t = 2.0 * std::numbers::pi * m / gridSize;
    Cplx z(std::cos(t), std::sin(t));
    acc += f(z) * std::pow(z, -k);
  }
  return acc / static_cast<double>(gridSize);
}

inline CMat dftCoeff(const LaurentSymbol& s, int gridSize, int k) {
  return dftCoeff([&](Cplx z) { return s.evaluate(z); }, s.dim(), gridSize, k);
}

// Dense block Toeplitz truncation written from the definition.
inline CMat denseToeplitz(const LaurentSymbol& phi, int blocks) {
  int n = phi.dim();
  CMat m = CMat::Zero(static_cast<Eigen::Index>(n) * blocks,
                      static_cast<Eigen::Index>(n) * blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j)
      m.block(static_cast<Eigen::Index>(i) * n,
              static_cast<Eigen::Index>(j) * n, n, n) = phi.coeff(i - j);
  return m;
}

// Dense block Hankel truncation written from the definition.
inline CMat denseHankel(const LaurentSymbol& phi, int blocks) {
  int n = phi.dim();
  CMat m = CMat::Zero(static_cast<Eigen::Index>(n) * blocks,
                      static_cast<Eigen::Index>(n) * blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j)
      m.block(static_cast<Eigen::Index>(i) * n,
              static_cast<Eigen::Index>(j) * n, n, n) = phi.coeff(-1 - i - j);
  return m;
}

// Top-left corner of [T^*, T] computed the naive way: truncate T densely at
// `big` blocks, multiply, subtract, crop.  Valid as the infinite-operator
// corner when big >= corner + max degree.
inline CMat denseCommutatorCorner(const LaurentSymbol& phi, int corner,
                                  int big) {
  int n = phi.dim();
  CMat t = denseToeplitz(phi, big);
  CMat c = t.adjoint() * t - t * t.adjoint();
  return c.topLeftCorner(static_cast<Eigen::Index>(n) * corner,
                         static_cast<Eigen::Index>(n) * corner);
}

inline double maxAbsDiff(const CMat& a, const CMat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace btop_test
