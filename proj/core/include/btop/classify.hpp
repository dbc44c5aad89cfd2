#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btop/blaschke.hpp"
#include "btop/config.hpp"
#include "btop/model_space.hpp"
#include "btop/operator_lab.hpp"

namespace btop {

// Orthonormal basis of the numerical column span: SVD, keep singular values
// > rankTol * largest.
CMat orthonormalRange(const CMat& a, double rankTol = 1e-10);

// Largest principal angle between the spans of two orthonormal-column
// matrices of equal column count, in radians.
double largestPrincipalAngle(const CMat& u1, const CMat& u2);

// Membership evidence for K in the contractive-multiplier set of phi:
// K analytic with sup-norm <= 1 and phi - K phi^* analytic.  supNorm is a
// circle-grid estimate of ||K||_inf; analyticResidual folds together the
// negative-coefficient mass of phi - K phi^* and of K itself.
struct CowenCertificate {
  double supNorm = 0;
  double analyticResidual = 0;

  bool member(double tolNorm, double tolCoeff) const {
    return supNorm <= 1.0 + tolNorm && analyticResidual <= tolCoeff;
  }
};

CowenCertificate checkCowenMember(const LaurentSymbol& phi,
                                  const LaurentSymbol& k, int gridSize = 512);

// Hyponormality decided on the commutator support block: symbol must be
// pointwise normal (else not hyponormal) and the Hankel-difference form of
// [T^*, T] must be PSD.  Exact decision for trigonometric symbols.
struct HyponormalityResult {
  bool hyponormal = false;
  bool normalSymbol = false;
  double normalSymbolDefect = 0;
  CommutatorResult commutator;
};

HyponormalityResult isHyponormal(const LaurentSymbol& phi,
                                 const RunConfig& config = {});

// Normality of the operator T_phi.  For pointwise-normal phi with
// det(phi_+) not identically zero, T_phi is normal iff
// phi_+ - phi_+(0) = phi_- U for a constant unitary U; the best unitary is
// found by Procrustes and the criterion cross-checked against commutator
// rank 0.  When det(phi_+) degenerates only the commutator test is used.
struct NormalOperatorResult {
  bool normal = false;
  std::string criterion;  // "intertwining" | "commutator-only" | "symbol-not-normal"
  double residual = 0;        // coefficient norm of phi_+ - phi_+(0) - phi_- U
  double unitaryDefect = 0;   // || U^* U - I ||_max
  CMat unitary;               // empty unless criterion == "intertwining"
};

NormalOperatorResult isNormalOperator(const LaurentSymbol& phi,
                                      const RunConfig& config = {});

// One rung of the Bram-Halmos ladder: block matrix ([T^{*j}, T^i])_{i,j<=k}
// on exact windows.  The blocks are built from the sup-norm-normalised
// symbol (a block-diagonal congruence, so positivity is unaffected) and
// minEigenvalue refers to that normalised matrix.  windowPsd is the window
// decision; pass additionally requires pointwise normality of the symbol,
// without which the window form drops the Toeplitz part of the commutators
// and proves nothing.
struct KHyponormalityStep {
  int k = 0;
  double minEigenvalue = 0;
  bool windowPsd = false;
  bool pass = false;
};

std::vector<KHyponormalityStep> kHyponormality(const LaurentSymbol& phi,
                                               int kMax,
                                               const RunConfig& config = {});

// Whether T_phi maps ker[T^*, T] into itself, checked on a window wide
// enough that the decision is exact (tail basis vectors further than
// degMinus blocks from the commutator support cannot map back onto it).
bool kernelInvariance(const LaurentSymbol& phi, const RunConfig& config = {},
                      double* maxResidual = nullptr);

// Relative Frobenius deviation of the commutator factorization
//   [T^*, T] = H_{phi^*}^* (I - T_{K tilde} T_{K tilde}^*) H_{phi^*}
// on its support window; meaningful when K certifies hyponormality.
double commutatorFactorizationDeviation(const LaurentSymbol& phi,
                                        const LaurentSymbol& k,
                                        bool allowStandin = false);

// Compares cl Ran [T^*, T] with cl T_{phi Q^*} H(Q) by largest principal
// angle on a shared window.
struct RangeComparisonReport {
  int commutatorRangeDim = 0;
  int imageDim = 0;
  double largestAngle = 0;  // pi/2 sentinel on dimension mismatch
  bool pass = false;
  CMat commutatorBasis;  // orthonormal columns on the shared window
  CMat imageBasis;
};

RangeComparisonReport commutatorRangeComparison(const LaurentSymbol& phi,
                                                const PotapovProduct& q,
                                                const RunConfig& config = {});

// rank [T^*, T] <= dim H(Q).
struct RankBoundReport {
  int commutatorRank = 0;
  int modelSpaceDim = 0;
  bool holds = false;
};

RankBoundReport commutatorRankBound(const LaurentSymbol& phi,
                                    const PotapovProduct& q,
                                    bool allowStandin = false);

// Least-degree polynomial kernel vector of T_{phi^*} or H_{phi conjugate},
// searched degree by degree up to degreeBound.  The decision per degree is
// exact: the row window used is large enough that all further rows vanish
// on polynomials of that degree.
enum class KernelSearchTarget { toeplitz_adjoint, conjugate_hankel };

struct KernelWitness {
  bool found = false;
  int degree = -1;
  CVec vector;  // coefficient window, (degree+1) blocks
  double residual = 0;
};

KernelWitness injectivityWitness(KernelSearchTarget target,
                                 const LaurentSymbol& phi, int degreeBound,
                                 bool allowStandin = false);

// phi_-^* = B Theta_2^* with Theta_2 = z^degMinus I: the minimal-degree
// coanalytic factorization used by the dichotomy.  B is the analytic
// polynomial with B.coeff(j) = phi.coeff(j - degMinus), j < degMinus.
struct CoanalyticFactorization {
  LaurentSymbol b;
  int monomialDegree = 0;  // Theta_2 = z^monomialDegree * I
};

CoanalyticFactorization coanalyticFactorization(const LaurentSymbol& phi);

enum class Verdict { not_hyponormal, normal, analytic, subnormal_evidence, hyponormal_only };
std::string verdictName(Verdict v);

struct WitnessRecord {
  std::string kind;
  double residual = 0;
  bool hasPoint = false;
  Cplx point{0.0, 0.0};
  CVec vector;  // optional, block-structured
};

// Outcome of testing the structural dichotomy for phi = Q phi^*: when the
// coanalytic factor B is coprime with z^degMinus I, evidence of
// subnormality beyond hyponormality is only consistent with a normal
// operator or an analytic symbol.
struct DichotomyReport {
  double relationResidual = 0;  // coefficient norm of phi - Q phi^*
  bool coprime = false;
  bool applicable = false;      // coprime and not a stand-in
  bool consistent = true;
  std::string hypothesisFailure;  // why the dichotomy does not apply, if so
};

struct ClassificationReport {
  int n = 0;
  int degMinus = 0;
  int degPlus = 0;
  bool standin = false;
  RunConfig config;

  bool analytic = false;
  double analyticDefect = 0;
  bool normalSymbol = false;
  double normalSymbolDefect = 0;

  bool hyponormal = false;
  CommutatorResult commutator;
  NormalOperatorResult normalOperator;

  std::vector<KHyponormalityStep> kSteps;
  int kHyponormalUpTo = 0;  // largest consecutive passing k

  int modelSpaceDim = -1;  // -1 when no Q supplied
  std::optional<DichotomyReport> dichotomy;

  Verdict verdict = Verdict::not_hyponormal;
  std::vector<WitnessRecord> witnesses;
};

// Full classification; Q, when given, must satisfy phi = Q phi^* up to
// tolCoeff (PreconditionError otherwise) and enables the model-space and
// dichotomy sections.
ClassificationReport classify(const LaurentSymbol& phi,
                              const std::optional<PotapovProduct>& q,
                              const RunConfig& config);

}  // namespace btop
