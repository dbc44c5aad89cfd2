#include "btop/operator_lab.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

namespace btop {

namespace {

void standinGate(const LaurentSymbol& phi, bool allowStandin) {
  if (phi.boundedType() == BoundedType::not_bounded_type_standin && !allowStandin)
    throw PreconditionError(
        "symbol is a declared stand-in for an unbounded-type function; "
        "truncations require allowStandin");
}

void checkSameShape(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.n != b.n || a.blocks != b.blocks)
    throw PreconditionError("operator shapes do not match");
}

double maxAbsCorner(const CMat& m, int rows, int cols) {
  if (rows <= 0 || cols <= 0) return 0.0;
  return m.topLeftCorner(rows, cols).cwiseAbs().maxCoeff();
}

}  // namespace

TruncatedOperator toeplitz(const LaurentSymbol& phi, int blocks,
                           bool allowStandin) {
  standinGate(phi, allowStandin);
  if (blocks < 0) throw PreconditionError("negative truncation size");
  int n = phi.dim();
  TruncatedOperator op;
  op.n = n;
  op.blocks = blocks;
  op.kind = OperatorKind::toeplitz;
  op.exactWindow = blocks;
  op.exactEverywhere = false;
  op.bandBlocks = std::max(phi.degMinus(), phi.degPlus());
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n) * blocks,
                         static_cast<Eigen::Index>(n) * blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j) {
      if (i - j < -phi.degMinus() || i - j > phi.degPlus()) continue;
      op.matrix.block(static_cast<Eigen::Index>(i) * n,
                      static_cast<Eigen::Index>(j) * n, n, n) =
          phi.coeff(i - j);
    }
  return op;
}

TruncatedOperator hankel(const LaurentSymbol& phi, int blocks,
                         bool allowStandin) {
  standinGate(phi, allowStandin);
  if (blocks < phi.degMinus())
    throw PreconditionError(
        "hankel truncation must cover the coanalytic degree so the matrix "
        "carries the whole operator");
  int n = phi.dim();
  TruncatedOperator op;
  op.n = n;
  op.blocks = blocks;
  op.kind = OperatorKind::hankel;
  op.exactWindow = blocks;
  op.exactEverywhere = true;
  op.bandBlocks = phi.degMinus();
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n) * blocks,
                         static_cast<Eigen::Index>(n) * blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks && i + j < phi.degMinus(); ++j)
      op.matrix.block(static_cast<Eigen::Index>(i) * n,
                      static_cast<Eigen::Index>(j) * n, n, n) =
          phi.coeff(-1 - i - j);
  return op;
}

TruncatedOperator laurent(const LaurentSymbol& phi, int blocks,
                          bool allowStandin) {
  standinGate(phi, allowStandin);
  if (blocks < 0) throw PreconditionError("negative truncation size");
  int n = phi.dim();
  int w = 2 * blocks;
  TruncatedOperator op;
  op.n = n;
  op.blocks = w;
  op.kind = OperatorKind::laurent;
  op.exactWindow = w;
  op.exactEverywhere = false;
  op.bandBlocks = std::max(phi.degMinus(), phi.degPlus());
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n) * w,
                         static_cast<Eigen::Index>(n) * w);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      int k = i - j;
      if (k < -phi.degMinus() || k > phi.degPlus()) continue;
      op.matrix.block(static_cast<Eigen::Index>(i) * n,
                      static_cast<Eigen::Index>(j) * n, n, n) = phi.coeff(k);
    }
  return op;
}

TruncatedOperator flipOperator(int n, int blocks) {
  int w = 2 * blocks;
  TruncatedOperator op;
  op.n = n;
  op.blocks = w;
  op.kind = OperatorKind::composite;
  op.exactWindow = w;
  op.exactEverywhere = false;
  op.bandBlocks = w;
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n) * w,
                         static_cast<Eigen::Index>(n) * w);
  // Index i of the doubled window holds frequency i - blocks; the flip sends
  // frequency k to -1-k, i.e. window index i to 2*blocks - 1 - i.
  for (int i = 0; i < w; ++i)
    op.matrix.block(static_cast<Eigen::Index>(w - 1 - i) * n,
                    static_cast<Eigen::Index>(i) * n, n, n) =
        CMat::Identity(n, n);
  return op;
}

TruncatedOperator analyticProjection(int n, int blocks) {
  int w = 2 * blocks;
  TruncatedOperator op;
  op.n = n;
  op.blocks = w;
  op.kind = OperatorKind::composite;
  op.exactWindow = w;
  op.exactEverywhere = false;
  op.bandBlocks = 0;
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n) * w,
                         static_cast<Eigen::Index>(n) * w);
  for (int i = blocks; i < w; ++i)
    op.matrix.block(static_cast<Eigen::Index>(i) * n,
                    static_cast<Eigen::Index>(i) * n, n, n) =
        CMat::Identity(n, n);
  return op;
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
  TruncatedOperator op = a;
  op.kind = OperatorKind::composite;
  op.matrix = a.matrix.adjoint();
  return op;
}

TruncatedOperator compose(const TruncatedOperator& a,
                          const TruncatedOperator& b) {
  checkSameShape(a, b);
  TruncatedOperator op;
  op.n = a.n;
  op.blocks = a.blocks;
  op.kind = OperatorKind::composite;
  op.matrix = a.matrix * b.matrix;
  op.bandBlocks = std::min(a.blocks, a.bandBlocks + b.bandBlocks);
  if (a.exactEverywhere && b.exactEverywhere) {
    op.exactEverywhere = true;
    op.exactWindow = a.blocks;
  } else if (b.exactEverywhere) {
    op.exactWindow = a.exactWindow;
  } else if (a.exactEverywhere) {
    op.exactWindow = b.exactWindow;
  } else {
    op.exactWindow = std::max(
        0, std::min(a.exactWindow, b.exactWindow) - b.bandBlocks);
  }
  return op;
}

TruncatedOperator operatorWord(const LaurentSymbol& phi,
                               const std::vector<bool>& adjointFlags,
                               int blocks, bool allowStandin) {
  standinGate(phi, allowStandin);
  int n = phi.dim();
  int band = std::max(phi.degMinus(), phi.degPlus());
  int full = blocks + static_cast<int>(adjointFlags.size()) * band;
  TruncatedOperator t = toeplitz(phi, full, allowStandin);
  CMat tadj = t.matrix.adjoint();
  CMat acc = CMat::Identity(static_cast<Eigen::Index>(n) * full,
                            static_cast<Eigen::Index>(n) * full);
  for (bool star : adjointFlags) acc = acc * (star ? tadj : t.matrix);
  TruncatedOperator op;
  op.n = n;
  op.blocks = blocks;
  op.kind = OperatorKind::composite;
  op.exactWindow = blocks;
  op.exactEverywhere = false;
  op.bandBlocks =
      std::min(blocks, static_cast<int>(adjointFlags.size()) * band);
  op.matrix = acc.topLeftCorner(static_cast<Eigen::Index>(n) * blocks,
                                static_cast<Eigen::Index>(n) * blocks);
  return op;
}

TruncatedOperator operatorWord(const LaurentSymbol& phi, const std::string& word,
                               int blocks, bool allowStandin) {
  std::vector<bool> flags;
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'T') throw ParseError("operator word must be T and T* tokens");
    bool star = i + 1 < word.size() && word[i + 1] == '*';
    flags.push_back(star);
    if (star) ++i;
  }
  return operatorWord(phi, flags, blocks, allowStandin);
}

CommutatorResult selfCommutator(const LaurentSymbol& phi, bool allowStandin) {
  standinGate(phi, allowStandin);
  int n = phi.dim();
  int s = std::max(phi.degMinus(), phi.degPlus());
  CommutatorResult r;
  r.n = n;
  r.supportBlocks = s;
  if (s == 0) {
    r.matrix = CMat::Zero(0, 0);
    r.eigenvalues = RVec::Zero(0);
    return r;
  }
  auto gram = [&](const LaurentSymbol& f, int blocks) {
    TruncatedOperator h = hankel(f, blocks, true);
    return CMat(h.matrix.adjoint() * h.matrix);
  };
  r.matrix = gram(phi.adjoint(), s) - gram(phi, s);
  CMat wide = gram(phi.adjoint(), 2 * s) - gram(phi, 2 * s);
  double off = 0.0;
  Eigen::Index cut = static_cast<Eigen::Index>(n) * s;
  off = std::max(off, maxAbsCorner(wide.bottomRows(wide.rows() - cut),
                                   static_cast<int>(wide.rows() - cut),
                                   static_cast<int>(wide.cols())));
  off = std::max(off, maxAbsCorner(wide.rightCols(wide.cols() - cut),
                                   static_cast<int>(wide.rows()),
                                   static_cast<int>(wide.cols() - cut)));
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (r.matrix + r.matrix.adjoint()));
  r.eigenvalues = es.eigenvalues();
  r.minEigenvalue = r.eigenvalues(0);
  double scale = std::max(1.0, r.eigenvalues.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i)
    if (std::abs(r.eigenvalues(i)) > 1e-10 * scale) ++r.rank;
  r.offSupportResidual = off;
  return r;
}

double IdentitySuiteReport::maxDeviation() const {
  return std::max({adjointDeviation, productDeviation, analyticShiftDeviation,
                   absorptionDeviation});
}

IdentitySuiteReport identitySuite(const LaurentSymbol& phi,
                                  const LaurentSymbol& psi,
                                  const LaurentSymbol& theta, int blocks,
                                  bool allowStandin) {
  standinGate(phi, allowStandin);
  standinGate(psi, allowStandin);
  if (phi.dim() != psi.dim() || phi.dim() != theta.dim())
    throw PreconditionError("identity suite needs equal symbol dimensions");
  int n = phi.dim();
  LaurentSymbol psiA = split(psi).plus;
  int band = 0;
  for (const LaurentSymbol* s :
       {&phi, &psi, &theta, static_cast<const LaurentSymbol*>(&psiA)})
    band = std::max({band, s->degMinus(), s->degPlus()});
  int wide = blocks + band;
  Eigen::Index c = static_cast<Eigen::Index>(n) * blocks;

  auto corner = [&](const CMat& m) { return CMat(m.topLeftCorner(c, c)); };
  auto dev = [&](const CMat& a, const CMat& b) {
    CMat d = corner(a) - corner(b);
    return d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
  };

  IdentitySuiteReport rep;

  CMat tPhi = toeplitz(phi, wide, true).matrix;
  CMat hPhi = hankel(phi, wide, true).matrix;
  rep.adjointDeviation =
      std::max(dev(tPhi.adjoint(), toeplitz(phi.adjoint(), wide, true).matrix),
               dev(hPhi.adjoint(), hankel(phi.tilde(), wide, true).matrix));

  CMat tPsi = toeplitz(psi, wide, true).matrix;
  CMat lhsProd = toeplitz(phi * psi, wide, true).matrix - tPhi * tPsi;
  CMat rhsProd = hankel(phi.adjoint(), wide, true).matrix.adjoint() *
                 hankel(psi, wide, true).matrix;
  rep.productDeviation = dev(lhsProd, rhsProd);

  CMat tPsiA = toeplitz(psiA, wide, true).matrix;
  rep.analyticShiftDeviation =
      std::max(dev(hPhi * tPsiA, hankel(phi * psiA, wide, true).matrix),
               dev(hankel(psiA * phi, wide, true).matrix,
                   toeplitz(psiA.tilde(), wide, true).matrix.adjoint() * hPhi));

  CMat hThetaPhi = hankel(theta * phi, wide, true).matrix;
  CMat hThetaAdj = hankel(theta.adjoint(), wide, true).matrix;
  CMat lhsAbs = hPhi.adjoint() * hPhi - hThetaPhi.adjoint() * hThetaPhi;
  CMat rhsAbs = hPhi.adjoint() * hThetaAdj * hThetaAdj.adjoint() * hPhi;
  rep.absorptionDeviation = dev(lhsAbs, rhsAbs);

  return rep;
}

void writeOperatorCsv(const TruncatedOperator& op, std::ostream& out) {
  char buf[64];
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r) {
    for (Eigen::Index c2 = 0; c2 < op.matrix.cols(); ++c2) {
      Cplx v = op.matrix(r, c2);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
      out << (c2 ? "," : "") << buf;
    }
    out << '\n';
  }
}

void writeOperatorCsv(const TruncatedOperator& op, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  writeOperatorCsv(op, f);
}

void writeOperatorBinary(const TruncatedOperator& op, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  const char magic[4] = {'B', 'T', 'O', 'P'};
  f.write(magic, 4);
  std::uint32_t header[3] = {static_cast<std::uint32_t>(op.n),
                             static_cast<std::uint32_t>(op.blocks),
                             static_cast<std::uint32_t>(op.kind)};
  f.write(reinterpret_cast<const char*>(header), sizeof header);
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c2 = 0; c2 < op.matrix.cols(); ++c2) {
      double re = op.matrix(r, c2).real(), im = op.matrix(r, c2).imag();
      f.write(reinterpret_cast<const char*>(&re), sizeof re);
      f.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
  if (!f) throw ParseError("write failed for " + path);
}

TruncatedOperator readOperatorBinary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  char magic[4];
  std::uint32_t header[3];
  f.read(magic, 4);
  f.read(reinterpret_cast<char*>(header), sizeof header);
  if (!f || std::memcmp(magic, "BTOP", 4) != 0)
    throw ParseError(path + ": bad operator file header");
  if (header[0] == 0 || header[0] > 1024 || header[1] > 65536 || header[2] > 4)
    throw ParseError(path + ": implausible operator file header");
  TruncatedOperator op;
  op.n = static_cast<int>(header[0]);
  op.blocks = static_cast<int>(header[1]);
  op.kind = static_cast<OperatorKind>(header[2]);
  op.exactWindow = op.blocks;
  op.exactEverywhere = op.kind == OperatorKind::hankel;
  op.bandBlocks = op.blocks;
  Eigen::Index size = static_cast<Eigen::Index>(op.n) * op.blocks;
  op.matrix = CMat::Zero(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c2 = 0; c2 < size; ++c2) {
      double re = 0, im = 0;
      f.read(reinterpret_cast<char*>(&re), sizeof re);
      f.read(reinterpret_cast<char*>(&im), sizeof im);
      op.matrix(r, c2) = Cplx(re, im);
    }
  if (!f) throw ParseError(path + ": truncated operator payload");
  f.peek();
  if (!f.eof()) throw ParseError(path + ": trailing bytes after payload");
  return op;
}

}  // namespace btop
