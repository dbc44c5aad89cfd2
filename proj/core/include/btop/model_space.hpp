#pragma once

#include <iosfwd>

#include "btop/blaschke.hpp"

namespace btop {

// Orthogonal basis of H(Q) = H^2 (-) Q H^2 for a finite Potapov product,
// represented on a coefficient window of `blocks` blocks.  Built from the
// exact recursion H(F1 F2) = H(F1) (+) F1 H(F2), so the vectors are exactly
// orthogonal in H^2; on the window they are orthogonal up to the certified
// per-vector tail mass.  For polynomial products the tails are exactly zero
// once the window covers the product degree.
struct ModelSpaceBasis {
  int n = 0;             // block size
  int blocks = 0;        // window length, >= requested
  CMat vectors;          // (n*blocks) x dim, columns are basis vectors
  RVec tails;            // per-column l2 norm of the coefficients beyond the window
  double tailBound = 0;  // max of tails

  int dim() const { return static_cast<int>(vectors.cols()); }
};

// Window auto-enlarges beyond minBlocks until every tail is <= tailTol.
ModelSpaceBasis modelSpace(const PotapovProduct& q, int minBlocks,
                           double tailTol = 1e-8);

void writeBasisCsv(const ModelSpaceBasis& basis, std::ostream& out);
void writeBasisCsv(const ModelSpaceBasis& basis, const std::string& path);

}  // namespace btop
