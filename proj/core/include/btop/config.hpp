#pragma once

#include <cstdint>

namespace btop {

struct RunConfig {
  int nTrunc = 64;          // default truncation window, in blocks
  int kMax = 4;             // highest k for the k-hyponormality ladder
  double tolCoeff = 1e-10;  // coefficient-level equality
  double tolPsd = 1e-9;     // PSD accepted when min eigenvalue >= -tolPsd
  double tolAngle = 1e-6;   // subspace comparison, radians
  int gridSize = 512;       // circle sample count for sup-norm estimates
  std::uint64_t seed = 1;
  bool allowStandin = false;
};

}  // namespace btop
