#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "btop/laurent_symbol.hpp"

namespace btop {

enum class OperatorKind : unsigned {
  toeplitz = 0,
  hankel = 1,
  composite = 2,
  commutator = 3,
  laurent = 4,
};

// Finite truncation of an operator on H^2(C^n) (or on the doubled L^2
// window for the laurent/flip kinds), stored as an (n*blocks) x (n*blocks)
// matrix of n x n blocks.
//
// exactWindow is the certified number of blocks: the top-left
// (n*W) x (n*W) corner equals the corresponding corner of the infinite
// operator.  Fresh fills have W = blocks.  exactEverywhere marks operators
// (Hankel fills and their compositions) whose nonzero entries all live
// inside the stored matrix, making the truncation the whole operator.
// Composition propagates the window conservatively: multiplying by a banded
// truncation of bandwidth b costs b blocks of window unless one factor is
// exact everywhere, in which case the connecting sum is finite and nothing
// is lost.
struct TruncatedOperator {
  int n = 0;
  int blocks = 0;
  OperatorKind kind = OperatorKind::composite;
  int exactWindow = 0;
  bool exactEverywhere = false;
  int bandBlocks = 0;
  CMat matrix;

  CMat block(int i, int j) const { return matrix.block(i * n, j * n, n, n); }
};

// Block (i,j) = coeff(i-j), i,j in [0, blocks).
TruncatedOperator toeplitz(const LaurentSymbol& phi, int blocks,
                           bool allowStandin = false);

// Block (i,j) = coeff(-1-i-j); identically zero beyond degMinus blocks.
// Requires blocks >= degMinus so the matrix carries the whole operator.
TruncatedOperator hankel(const LaurentSymbol& phi, int blocks,
                         bool allowStandin = false);

// Bilateral fill on the doubled window k in [-blocks, blocks): block
// (i,j) = coeff(i-j) with row/col indices offset by `blocks`.
TruncatedOperator laurent(const LaurentSymbol& phi, int blocks,
                          bool allowStandin = false);

// Coefficient flip k -> -1-k on the doubled window, as a block permutation.
// J^2 = I exactly; conjugation sends the bilateral fill of phi to that of
// phi.breve(), and the analytic compression of J * laurent(phi) recovers
// the Hankel fill.
TruncatedOperator flipOperator(int n, int blocks);

// Orthogonal projection of the doubled window onto the analytic half k >= 0.
TruncatedOperator analyticProjection(int n, int blocks);

TruncatedOperator adjoint(const TruncatedOperator& a);
TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b);

// Product of T_phi / T_phi^* factors, left to right; adjointFlags[i] true
// selects the adjoint factor.  Computed at truncation blocks + L*band and
// cropped, so the returned window is exact: an entry (p,q), p,q < blocks,
// of the infinite product only walks through intermediate indices
// < blocks + L*band, where band = max(degMinus, degPlus).
TruncatedOperator operatorWord(const LaurentSymbol& phi,
                               const std::vector<bool>& adjointFlags,
                               int blocks, bool allowStandin = false);

// Word given as tokens "T" and "T*", e.g. "T*TT*".
TruncatedOperator operatorWord(const LaurentSymbol& phi, const std::string& word,
                               int blocks, bool allowStandin = false);

// Hankel-difference form of the self-commutator [T^*, T]: the Gram matrix
// of the analytic-part Hankel minus that of the coanalytic one.  Supported
// on max(degMinus, degPlus) blocks and computed there in full.  Coincides
// with [T_phi^*, T_phi] exactly when the symbol is pointwise normal
// (otherwise the commutator keeps a Toeplitz term this form drops).
struct CommutatorResult {
  int n = 0;
  int supportBlocks = 0;
  CMat matrix;               // (n*s) x (n*s), Hermitian
  RVec eigenvalues;          // ascending
  double minEigenvalue = 0;  // 0 for empty support
  int rank = 0;
  double offSupportResidual = 0;  // max entry outside support on a doubled window
};

CommutatorResult selfCommutator(const LaurentSymbol& phi,
                                bool allowStandin = false);

// Max deviation, per identity, of the four exact-window operator identities
// relating Toeplitz and Hankel fills:
//   adjoint:     T_phi^* = T_{phi^*}   and   H_phi^* = H_{phi tilde}
//   product:     T_{phi psi} - T_phi T_psi = H_{phi^*}^* H_psi
//   analytic:    H_phi T_psi = H_{phi psi}   and   H_{psi phi} = T_{psi tilde}^* H_phi
//                (psi analytic)
//   absorption:  H_phi^* H_phi - H_{theta phi}^* H_{theta phi}
//                    = H_phi^* H_{theta^*} H_{theta^*}^* H_phi
//                (theta inner)
struct IdentitySuiteReport {
  double adjointDeviation = 0;
  double productDeviation = 0;
  double analyticShiftDeviation = 0;
  double absorptionDeviation = 0;

  double maxDeviation() const;
};

IdentitySuiteReport identitySuite(const LaurentSymbol& phi,
                                  const LaurentSymbol& psi,
                                  const LaurentSymbol& theta, int blocks,
                                  bool allowStandin = false);

// CSV: one line per matrix row, entries as re,im field pairs, %.17g.
void writeOperatorCsv(const TruncatedOperator& op, std::ostream& out);
void writeOperatorCsv(const TruncatedOperator& op, const std::string& path);

// Binary: 16-byte little-endian header (magic "BTOP", u32 n, u32 blocks,
// u32 kind) followed by row-major re/im interleaved float64.
void writeOperatorBinary(const TruncatedOperator& op, const std::string& path);
TruncatedOperator readOperatorBinary(const std::string& path);

}  // namespace btop
