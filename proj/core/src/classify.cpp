#include "btop/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace btop {

namespace {

constexpr double kRankTol = 1e-10;

CMat cropTopLeft(const CMat& m, Eigen::Index size) {
  return m.topLeftCorner(size, size);
}

double maxAbsOrZero(const CMat& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

double operatorNormOf(const CMat& m) {
  if (!m.size()) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

CMat orthonormalRange(const CMat& a, double rankTol) {
  if (!a.size()) return CMat(a.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cut = rankTol * std::max(sv(0), 1e-300);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

double largestPrincipalAngle(const CMat& u1, const CMat& u2) {
  if (u1.cols() != u2.cols())
    throw PreconditionError("principal angles need equal subspace dimensions");
  if (u1.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(CMat(u1.adjoint() * u2));
  double c = svd.singularValues()(svd.singularValues().size() - 1);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

CowenCertificate checkCowenMember(const LaurentSymbol& phi,
                                  const LaurentSymbol& k, int gridSize) {
  if (phi.dim() != k.dim())
    throw PreconditionError("multiplier dimension does not match symbol");
  CowenCertificate cert;
  for (int j = 0; j < gridSize; ++j) {
    double t = 2.0 * std::numbers::pi * j / gridSize;
    Cplx z = std::polar(1.0, t);
    cert.supNorm = std::max(cert.supNorm, operatorNormOf(k.evaluate(z)));
  }
  LaurentSymbol defectSym = phi - k * phi.adjoint();
  cert.analyticResidual =
      std::max(k.analyticDefect(), defectSym.analyticDefect());
  return cert;
}

HyponormalityResult isHyponormal(const LaurentSymbol& phi,
                                 const RunConfig& config) {
  HyponormalityResult r;
  r.normalSymbol = isNormalSymbol(phi, config.tolCoeff, &r.normalSymbolDefect);
  r.commutator = selfCommutator(phi, config.allowStandin);
  r.hyponormal = r.normalSymbol && r.commutator.minEigenvalue >= -config.tolPsd;
  return r;
}

NormalOperatorResult isNormalOperator(const LaurentSymbol& phi,
                                      const RunConfig& config) {
  NormalOperatorResult r;
  if (!isNormalSymbol(phi, config.tolCoeff)) {
    r.criterion = "symbol-not-normal";
    return r;
  }
  SymbolSplit parts = split(phi);
  int n = phi.dim();

  // Is det(phi_+) identically zero?  A degree-(n * degPlus) polynomial that
  // stays below noise on a grid larger than its degree must vanish.
  int grid = std::max(64, n * parts.plus.degPlus() + 2);
  double detMax = 0.0;
  for (int j = 0; j < grid; ++j) {
    Cplx z = std::polar(1.0, 2.0 * std::numbers::pi * j / grid);
    detMax = std::max(detMax, std::abs(parts.plus.evaluate(z).determinant()));
  }
  double detScale = std::pow(1.0 + phi.maxCoeffNorm(), n);
  bool detDegenerate = detMax <= 1e-12 * detScale;

  CommutatorResult cmt = selfCommutator(phi, config.allowStandin);
  bool commutatorZero = maxAbsOrZero(cmt.matrix) <=
                        config.tolCoeff * std::max(1.0, phi.maxCoeffNorm());

  if (detDegenerate) {
    r.criterion = "commutator-only";
    r.normal = commutatorZero;
    r.residual = maxAbsOrZero(cmt.matrix);
    return r;
  }

  r.criterion = "intertwining";
  LaurentSymbol plusShift = parts.plus;
  plusShift.setCoeff(0, CMat::Zero(n, n));
  int depth = std::max({parts.minus.degPlus(), plusShift.degPlus(), 1});
  CMat a = CMat::Zero(static_cast<Eigen::Index>(n) * depth, n);
  CMat b = CMat::Zero(static_cast<Eigen::Index>(n) * depth, n);
  for (int k = 1; k <= depth; ++k) {
    a.block(static_cast<Eigen::Index>(k - 1) * n, 0, n, n) =
        parts.minus.coeff(k);
    b.block(static_cast<Eigen::Index>(k - 1) * n, 0, n, n) =
        plusShift.coeff(k);
  }
  Eigen::JacobiSVD<CMat> svd(CMat(a.adjoint() * b),
                             Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMat u = svd.matrixU() * svd.matrixV().adjoint();
  r.unitary = u;
  r.unitaryDefect = maxAbsOrZero(u.adjoint() * u - CMat::Identity(n, n));
  r.residual =
      (plusShift - parts.minus * LaurentSymbol::constant(u)).maxCoeffNorm();
  r.normal = r.residual <= config.tolCoeff * std::max(1.0, phi.maxCoeffNorm());

  if (r.normal != commutatorZero)
    throw InternalCheckError(
        "normality criteria disagree: intertwining vs vanishing commutator");
  return r;
}

std::vector<KHyponormalityStep> kHyponormality(const LaurentSymbol& phi,
                                               int kMax,
                                               const RunConfig& config) {
  std::vector<KHyponormalityStep> steps;
  if (kMax < 1) return steps;
  bool normalSym = isNormalSymbol(phi, config.tolCoeff);
  int n = phi.dim();
  int nTrunc = config.nTrunc;
  int band = std::max(phi.degMinus(), phi.degPlus());
  int full = nTrunc + 2 * kMax * band;
  Eigen::Index dim = static_cast<Eigen::Index>(n) * nTrunc;

  // Work with the sup-norm-normalised symbol: the ladder matrix transforms
  // by a block-diagonal congruence under phi -> phi/s, so positivity is
  // unchanged while eighth powers of the operator stay O(1) and rounding
  // noise stays far below the PSD tolerance.
  double scale = 1.0;
  for (const auto& [k, a] : phi.coeffs()) scale += a.norm();
  LaurentSymbol work = phi.scaled(1.0 / scale);

  TruncatedOperator t = toeplitz(work, full, config.allowStandin);

  // Only the leading dim x dim corner of each product survives, so carry
  // the first block-columns of T^i (for the T*^j T^i corner) and the first
  // block-rows (for the T^i T*^j corner) instead of full powers.
  std::vector<CMat> colSlab(static_cast<size_t>(kMax) + 1);
  std::vector<CMat> rowSlab(static_cast<size_t>(kMax) + 1);
  colSlab[1] = t.matrix.leftCols(dim);
  rowSlab[1] = t.matrix.topRows(dim);
  for (int i = 2; i <= kMax; ++i) {
    colSlab[i] = t.matrix * colSlab[i - 1];
    rowSlab[i] = rowSlab[i - 1] * t.matrix;
  }

  // blocks[i][j] = window of [T^{*(j+1)}, T^{i+1}]
  std::vector<std::vector<CMat>> blocks(static_cast<size_t>(kMax));
  for (int i = 1; i <= kMax; ++i) {
    blocks[i - 1].resize(static_cast<size_t>(kMax));
    for (int j = 1; j <= kMax; ++j) {
      blocks[i - 1][j - 1] = colSlab[j].adjoint() * colSlab[i] -
                             rowSlab[i] * rowSlab[j].adjoint();
    }
  }

  for (int k = 1; k <= kMax; ++k) {
    CMat m = CMat::Zero(dim * k, dim * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        m.block(i * dim, j * dim, dim, dim) = blocks[i][j];
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
    KHyponormalityStep step;
    step.k = k;
    step.minEigenvalue = es.eigenvalues()(0);
    step.windowPsd = step.minEigenvalue >= -config.tolPsd;
    step.pass = step.windowPsd && normalSym;
    steps.push_back(step);
  }
  return steps;
}

bool kernelInvariance(const LaurentSymbol& phi, const RunConfig& config,
                      double* maxResidual) {
  CommutatorResult cmt = selfCommutator(phi, config.allowStandin);
  int n = phi.dim();
  int s = cmt.supportBlocks;
  if (maxResidual) *maxResidual = 0.0;
  if (s == 0) return true;
  int band = std::max(phi.degMinus(), phi.degPlus());
  int window = s + 2 * band + 2;
  TruncatedOperator t = toeplitz(phi, window, config.allowStandin);
  Eigen::Index head = static_cast<Eigen::Index>(n) * s;

  std::vector<CVec> kernelBasis;
  Eigen::SelfAdjointEigenSolver<CMat> es(cmt.matrix);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) > kRankTol * scale) continue;
    CVec v = CVec::Zero(t.matrix.rows());
    v.head(head) = es.eigenvectors().col(i);
    kernelBasis.push_back(v);
  }
  for (int r = s; r < s + band; ++r)
    for (int c = 0; c < n; ++c) {
      CVec v = CVec::Zero(t.matrix.rows());
      v(static_cast<Eigen::Index>(r) * n + c) = 1.0;
      kernelBasis.push_back(v);
    }

  double worst = 0.0;
  for (const CVec& v : kernelBasis) {
    CVec image = t.matrix * v;
    worst = std::max(worst, (cmt.matrix * image.head(head)).cwiseAbs().maxCoeff());
  }
  if (maxResidual) *maxResidual = worst;
  double tol = config.tolCoeff * scale *
               std::max(1.0, 1.0 + phi.maxCoeffNorm());
  return worst <= tol;
}

double commutatorFactorizationDeviation(const LaurentSymbol& phi,
                                        const LaurentSymbol& k,
                                        bool allowStandin) {
  if (phi.dim() != k.dim())
    throw PreconditionError("multiplier dimension does not match symbol");
  int band = std::max(phi.degMinus(), phi.degPlus());
  int window = std::max(band, 1) + k.degPlus() + 2;
  Eigen::Index c = static_cast<Eigen::Index>(phi.dim()) * std::max(band, 1);

  CMat lhs = cropTopLeft(
      operatorWord(phi, "T*T", window, allowStandin).matrix -
          operatorWord(phi, "TT*", window, allowStandin).matrix,
      c);

  CMat h = hankel(phi.adjoint(), window, allowStandin).matrix;
  CMat tk = toeplitz(k.tilde(), window, allowStandin).matrix;
  CMat mid = CMat::Identity(h.rows(), h.cols()) - tk * tk.adjoint();
  CMat rhs = cropTopLeft(CMat(h.adjoint() * mid * h), c);

  return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

RangeComparisonReport commutatorRangeComparison(const LaurentSymbol& phi,
                                                const PotapovProduct& q,
                                                const RunConfig& config) {
  if (phi.dim() != q.dim())
    throw PreconditionError("inner factor dimension does not match symbol");
  CommutatorResult cmt = selfCommutator(phi, config.allowStandin);
  int n = phi.dim();
  int s = cmt.supportBlocks;

  ModelSpaceBasis basis = modelSpace(q, std::max(s + 2, 8));
  int window = basis.blocks;
  Eigen::Index rows = static_cast<Eigen::Index>(n) * window;

  auto qf = q.fourier(window);
  LaurentSymbol phiQadj = phi * qf.symbol.adjoint();
  TruncatedOperator t = toeplitz(phiQadj, window, config.allowStandin);
  CMat image = t.matrix * basis.vectors;

  CMat commutatorSpan = CMat::Zero(rows, cmt.matrix.cols());
  commutatorSpan.topRows(static_cast<Eigen::Index>(n) * s) = cmt.matrix;

  CMat u1 = orthonormalRange(commutatorSpan);
  CMat u2 = orthonormalRange(image);

  RangeComparisonReport rep;
  rep.commutatorRangeDim = static_cast<int>(u1.cols());
  rep.imageDim = static_cast<int>(u2.cols());
  rep.commutatorBasis = std::move(u1);
  rep.imageBasis = std::move(u2);
  if (rep.commutatorRangeDim != rep.imageDim) {
    rep.largestAngle = std::numbers::pi / 2;
    rep.pass = false;
    return rep;
  }
  rep.largestAngle = largestPrincipalAngle(rep.commutatorBasis, rep.imageBasis);
  rep.pass = rep.largestAngle <= config.tolAngle;
  return rep;
}

RankBoundReport commutatorRankBound(const LaurentSymbol& phi,
                                    const PotapovProduct& q,
                                    bool allowStandin) {
  RankBoundReport rep;
  rep.commutatorRank = selfCommutator(phi, allowStandin).rank;
  rep.modelSpaceDim = q.modelSpaceDim();
  rep.holds = rep.commutatorRank <= rep.modelSpaceDim;
  return rep;
}

KernelWitness injectivityWitness(KernelSearchTarget target,
                                 const LaurentSymbol& phi, int degreeBound,
                                 bool allowStandin) {
  KernelWitness w;
  int n = phi.dim();
  LaurentSymbol sym = target == KernelSearchTarget::toeplitz_adjoint
                          ? phi.adjoint()
                          : phi.conjugate();
  for (int deg = 0; deg <= degreeBound; ++deg) {
    int rowBlocks, colBlocks = deg + 1;
    if (target == KernelSearchTarget::toeplitz_adjoint)
      rowBlocks = deg + sym.degMinus() + 1;
    else
      rowBlocks = std::max(sym.degMinus(), 1);
    TruncatedOperator op =
        target == KernelSearchTarget::toeplitz_adjoint
            ? toeplitz(sym, std::max(rowBlocks, colBlocks), allowStandin)
            : hankel(sym, std::max(rowBlocks, colBlocks), allowStandin);
    CMat sub = op.matrix.topLeftCorner(
        static_cast<Eigen::Index>(n) * rowBlocks,
        static_cast<Eigen::Index>(n) * colBlocks);
    Eigen::JacobiSVD<CMat> svd(sub, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smallest = sv(sv.size() - 1);
    if (smallest <= kRankTol * std::max(1.0, sv(0))) {
      w.found = true;
      w.degree = deg;
      w.vector = svd.matrixV().col(sv.size() - 1);
      w.residual = (sub * w.vector).cwiseAbs().maxCoeff();
      return w;
    }
  }
  return w;
}

CoanalyticFactorization coanalyticFactorization(const LaurentSymbol& phi) {
  CoanalyticFactorization f{LaurentSymbol::zero(phi.dim()), phi.degMinus()};
  for (int j = 0; j < phi.degMinus(); ++j)
    f.b.setCoeff(j, phi.coeff(j - phi.degMinus()));
  f.b.setBoundedType(phi.boundedType());
  return f;
}

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::not_hyponormal: return "not-hyponormal";
    case Verdict::normal: return "normal";
    case Verdict::analytic: return "analytic";
    case Verdict::subnormal_evidence: return "subnormal-evidence";
    case Verdict::hyponormal_only: return "hyponormal-only";
  }
  return "unknown";
}

ClassificationReport classify(const LaurentSymbol& phi,
                              const std::optional<PotapovProduct>& q,
                              const RunConfig& config) {
  ClassificationReport rep;
  rep.n = phi.dim();
  rep.degMinus = phi.degMinus();
  rep.degPlus = phi.degPlus();
  rep.standin = phi.isStandin();
  rep.config = config;

  rep.analyticDefect = phi.analyticDefect();
  rep.analytic = rep.analyticDefect <= config.tolCoeff;
  rep.normalSymbol = isNormalSymbol(phi, config.tolCoeff, &rep.normalSymbolDefect);

  HyponormalityResult hypo = isHyponormal(phi, config);
  rep.hyponormal = hypo.hyponormal;
  rep.commutator = hypo.commutator;
  rep.normalOperator = isNormalOperator(phi, config);

  if (!rep.normalSymbol) {
    WitnessRecord w;
    w.kind = "pointwise-normality-defect";
    w.residual = rep.normalSymbolDefect;
    rep.witnesses.push_back(w);
  } else if (!rep.hyponormal && rep.commutator.matrix.size()) {
    Eigen::SelfAdjointEigenSolver<CMat> es(rep.commutator.matrix);
    WitnessRecord w;
    w.kind = "negative-commutator-direction";
    w.residual = std::abs(es.eigenvalues()(0));
    w.vector = es.eigenvectors().col(0);
    rep.witnesses.push_back(w);
  }

  if (rep.hyponormal) {
    rep.kSteps = kHyponormality(phi, config.kMax, config);
    for (const auto& s : rep.kSteps) {
      if (s.k == rep.kHyponormalUpTo + 1 && s.pass) ++rep.kHyponormalUpTo;
    }
  }

  if (q) {
    if (phi.dim() != q->dim())
      throw PreconditionError("inner factor dimension does not match symbol");
    int order = std::max(phi.degMinus() + phi.degPlus() + 2,
                         q->factorCount() + 1);
    auto qf = q->fourier(order);
    while (qf.tailBound > 0.25 * config.tolCoeff && order < (1 << 14)) {
      order *= 2;
      qf = q->fourier(order);
    }
    double rel =
        (phi - qf.symbol * phi.adjoint()).maxCoeffNorm();
    double slack = qf.tailBound * std::max(1.0, phi.maxCoeffNorm());
    DichotomyReport dich;
    dich.relationResidual = rel;
    if (rel > config.tolCoeff * std::max(1.0, phi.maxCoeffNorm()) + slack)
      throw PreconditionError(
          "inner factor does not intertwine the symbol with its adjoint");

    rep.modelSpaceDim = q->modelSpaceDim();

    CoanalyticFactorization fact = coanalyticFactorization(phi);
    std::vector<Cplx> zeros;
    if (fact.monomialDegree > 0) zeros.push_back(Cplx(0.0, 0.0));
    CoprimeResult cop = leftCoprimeWithScalarInner(fact.b, zeros);
    dich.coprime = cop.coprime;
    dich.applicable = cop.coprime && !rep.standin;

    double invResidual = 0.0;
    bool kernelInv = kernelInvariance(phi, config, &invResidual);

    // For declared-unbounded symbols the kernels of H_{conj Phi} and
    // T_{Phi*} carry the evidence, so search them whether or not the
    // dichotomy needs an attribution below.
    KernelWitness hankelWitness;
    if (rep.standin) {
      hankelWitness = injectivityWitness(
          KernelSearchTarget::conjugate_hankel, phi,
          phi.degPlus() + 2, config.allowStandin);
      if (hankelWitness.found) {
        WitnessRecord w;
        w.kind = "conjugate-hankel-kernel";
        w.residual = hankelWitness.residual;
        w.vector = hankelWitness.vector;
        rep.witnesses.push_back(w);
      }
      KernelWitness tw = injectivityWitness(
          KernelSearchTarget::toeplitz_adjoint, phi,
          phi.degPlus() + 2, config.allowStandin);
      if (tw.found) {
        WitnessRecord w;
        w.kind = "toeplitz-adjoint-kernel";
        w.residual = tw.residual;
        w.vector = tw.vector;
        rep.witnesses.push_back(w);
      }
    }

    bool concludes = rep.normalOperator.normal || rep.analytic;
    if (rep.hyponormal && !concludes) {
      if (rep.standin) {
        dich.hypothesisFailure =
            "Φ* declared not of bounded type";
        if (hankelWitness.found)
          dich.hypothesisFailure += " + H_{Φ̄} witness found";
      } else if (!cop.coprime) {
        dich.hypothesisFailure = "B,Θ₂ not left coprime";
      } else if (!kernelInv) {
        dich.hypothesisFailure =
            "ker [T*,T] not invariant under the operator";
      } else {
        dich.consistent = false;
      }
    }
    if (!cop.coprime) {
      WitnessRecord w;
      w.kind = "coprimality";
      w.residual = cop.minScaledDet;
      w.hasPoint = true;
      w.point = cop.witnessPoint;
      w.vector = cop.witnessVector;
      rep.witnesses.push_back(w);
    }
    rep.dichotomy = dich;
  }

  if (!rep.hyponormal)
    rep.verdict = Verdict::not_hyponormal;
  else if (rep.normalOperator.normal)
    rep.verdict = Verdict::normal;
  else if (rep.analytic)
    rep.verdict = Verdict::analytic;
  else if (rep.kHyponormalUpTo >= config.kMax)
    rep.verdict = Verdict::subnormal_evidence;
  else
    rep.verdict = Verdict::hyponormal_only;

  return rep;
}

}  // namespace btop
