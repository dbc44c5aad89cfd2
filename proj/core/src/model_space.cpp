#include "btop/model_space.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace btop {

namespace {

// Certified bound on the l2 coefficient mass beyond `blocks` of a basis
// vector sqrt(1-|a|^2) * prefix(z) e / (1 - conj(a) z), where prefix is a
// sub-product of factors with |alpha| <= rho < 1 and e is a unit vector:
// with x in (1, 1/rho),  ||prefix_j|| <= Cp x^{-j}  gives
// ||g_k|| <= sqrt(1-|a|^2) Cp x^{-k} / (1 - |a| x).
double vectorTailBound(double alphaMod, double prefixMajorant, double x,
                       int blocks) {
  double c = std::sqrt(1.0 - alphaMod * alphaMod);
  double perCoeff = c * prefixMajorant / (1.0 - alphaMod * x);
  return perCoeff * std::pow(x, -blocks) / std::sqrt(1.0 - 1.0 / (x * x));
}

double factorMajorant(double rho, double x) {
  return 1.0 + (1.0 - rho * rho) * x / (1.0 - rho * x);
}

}  // namespace

ModelSpaceBasis modelSpace(const PotapovProduct& q, int minBlocks,
                           double tailTol) {
  int n = q.dim();
  int dim = q.modelSpaceDim();
  double rho = q.maxAlphaModulus();

  int blocks = std::max({minBlocks, q.factorCount() + 1, 2});
  double worstTail = 0.0;
  if (rho > 0.0) {
    double x = 0.5 * (1.0 + 1.0 / rho);
    auto worstAt = [&](int w) {
      double prefMaj = 1.0, worst = 0.0;
      for (const auto& f : q.factors()) {
        if (f.rank() > 0)
          worst = std::max(
              worst, vectorTailBound(std::abs(f.alpha), prefMaj, x, w));
        prefMaj *= factorMajorant(std::abs(f.alpha), x);
      }
      return worst;
    };
    while (worstAt(blocks) > tailTol) {
      if (blocks > (1 << 14))
        throw PreconditionError(
            "model space window would exceed 16384 blocks; factor zeros too "
            "close to the unit circle");
      blocks *= 2;
    }
    worstTail = worstAt(blocks);
  }

  ModelSpaceBasis out;
  out.n = n;
  out.blocks = blocks;
  out.vectors = CMat::Zero(static_cast<Eigen::Index>(n) * blocks, dim);
  out.tails = RVec::Zero(dim);
  out.tailBound = worstTail;

  // prefix(z) = v * F_1(z) ... F_{m-1}(z) as exact window coefficients.
  std::vector<CMat> prefix(static_cast<size_t>(blocks), CMat::Zero(n, n));
  prefix[0] = q.leading();
  double x = rho > 0.0 ? 0.5 * (1.0 + 1.0 / rho) : 0.0;
  double prefMaj = 1.0;

  int col = 0;
  for (const auto& f : q.factors()) {
    Eigen::SelfAdjointEigenSolver<CMat> es(f.projection);
    for (int i = 0; i < n; ++i) {
      if (es.eigenvalues()(i) < 0.5) continue;
      CVec e = es.eigenvectors().col(i);
      double c = std::sqrt(1.0 - std::norm(f.alpha));
      // g_k = c * (conj(a) g-part recursion): s_k = conj(a) s_{k-1} + prefix_k e.
      CVec s = CVec::Zero(n);
      for (int k = 0; k < blocks; ++k) {
        s = std::conj(f.alpha) * s + prefix[static_cast<size_t>(k)] * e;
        out.vectors.block(static_cast<Eigen::Index>(k) * n, col, n, 1) = c * s;
      }
      out.tails(col) =
          rho > 0.0 ? vectorTailBound(std::abs(f.alpha), prefMaj, x, blocks)
                    : 0.0;
      ++col;
    }
    // prefix *= F(z), truncated; low coefficients stay exact.
    std::vector<CMat> next(static_cast<size_t>(blocks), CMat::Zero(n, n));
    CMat id = CMat::Identity(n, n);
    CMat c0 = -f.alpha * f.projection + (id - f.projection);
    double w = 1.0 - std::norm(f.alpha);
    for (int j = 0; j < blocks; ++j) {
      if (prefix[static_cast<size_t>(j)].cwiseAbs().maxCoeff() == 0.0) continue;
      next[static_cast<size_t>(j)] += prefix[static_cast<size_t>(j)] * c0;
      for (int k = 1; j + k < blocks; ++k)
        next[static_cast<size_t>(j + k)] +=
            prefix[static_cast<size_t>(j)] *
            (w * std::pow(std::conj(f.alpha), k - 1) * f.projection);
    }
    prefix = std::move(next);
    if (rho > 0.0) prefMaj *= factorMajorant(std::abs(f.alpha), x);
  }

  if (col != dim)
    throw InternalCheckError("model space dimension mismatch against factor ranks");
  return out;
}

void writeBasisCsv(const ModelSpaceBasis& basis, std::ostream& out) {
  char buf[64];
  for (Eigen::Index r = 0; r < basis.vectors.rows(); ++r) {
    for (Eigen::Index c = 0; c < basis.vectors.cols(); ++c) {
      Cplx v = basis.vectors(r, c);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
      out << (c ? "," : "") << buf;
    }
    out << '\n';
  }
}

void writeBasisCsv(const ModelSpaceBasis& basis, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  writeBasisCsv(basis, f);
}

}  // namespace btop
