#include "btop/operator_lab.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "btop/generator.hpp"
#include "oracle_helpers.hpp"

using namespace btop;
using btop_test::dftCoeff;

namespace {

TEST(OperatorLab, ToeplitzFillMatchesDft) {
  // Asymmetric degrees on purpose: the fill must keep the full coefficient
  // range [-degMinus, degPlus], not a mirrored band.
  Rng rng(41);
  LaurentSymbol phi = randomSymbol(rng, 2, 1, 3);
  ASSERT_EQ(phi.degMinus(), 1);
  ASSERT_EQ(phi.degPlus(), 3);
  int blocks = 6;
  TruncatedOperator t = toeplitz(phi, blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j) {
      CMat want = dftCoeff(phi, 16, i - j);
      EXPECT_LT((t.block(i, j) - want).cwiseAbs().maxCoeff(), 1e-13)
          << "block " << i << "," << j;
    }
  EXPECT_EQ(t.exactWindow, blocks);
  EXPECT_EQ(t.bandBlocks, 3);
}

TEST(OperatorLab, ToeplitzShiftIsSubdiagonal) {
  LaurentSymbol z = LaurentSymbol::scalar({{1, 1.0}});
  TruncatedOperator t = toeplitz(z, 4);
  CMat want = CMat::Zero(4, 4);
  want(1, 0) = want(2, 1) = want(3, 2) = 1.0;
  EXPECT_EQ((t.matrix - want).cwiseAbs().maxCoeff(), 0.0);
}

TEST(OperatorLab, HankelFillMatchesDft) {
  Rng rng(42);
  LaurentSymbol phi = randomSymbol(rng, 2, 3, 1);
  TruncatedOperator h = hankel(phi, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CMat want = dftCoeff(phi, 16, -1 - i - j);
      EXPECT_LT((h.block(i, j) - want).cwiseAbs().maxCoeff(), 1e-13);
    }
  EXPECT_TRUE(h.exactEverywhere);
  EXPECT_THROW(hankel(phi, 2), PreconditionError);
}

TEST(OperatorLab, HankelIsFlipCompressionOfLaurent) {
  Rng rng(43);
  LaurentSymbol phi = randomSymbol(rng, 2, 2, 3);
  int blocks = 6;
  int n = phi.dim();
  TruncatedOperator l = laurent(phi, blocks);
  TruncatedOperator j = flipOperator(n, blocks);
  CMat jl = j.matrix * l.matrix;
  Eigen::Index half = static_cast<Eigen::Index>(n) * blocks;
  CMat compression = jl.block(half, half, half, half);
  EXPECT_LT((compression - hankel(phi, blocks).matrix).cwiseAbs().maxCoeff(),
            1e-14);
}

TEST(OperatorLab, FlipIsAnInvolution) {
  TruncatedOperator j = flipOperator(2, 5);
  CMat sq = j.matrix * j.matrix;
  EXPECT_EQ((sq - CMat::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff(),
            0.0);
}

TEST(OperatorLab, LaurentConjugationByFlipGivesBreve) {
  Rng rng(44);
  LaurentSymbol phi = randomSymbol(rng, 2, 2, 1);
  int blocks = 5;
  TruncatedOperator l = laurent(phi, blocks);
  TruncatedOperator j = flipOperator(2, blocks);
  CMat conj = j.matrix * l.matrix * j.matrix;
  CMat want = laurent(phi.breve(), blocks).matrix;
  EXPECT_LT((conj - want).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(OperatorLab, OperatorWordMatchesDenseCorner) {
  Rng rng(45);
  LaurentSymbol phi = randomSymbol(rng, 2, 1, 2);
  int blocks = 5;
  TruncatedOperator w = operatorWord(phi, "T*TT*", blocks);
  int big = blocks + 3 * std::max(phi.degMinus(), phi.degPlus()) + 2;
  CMat t = btop_test::denseToeplitz(phi, big);
  CMat dense = t.adjoint() * t * t.adjoint();
  EXPECT_LT(btop_test::maxAbsDiff(
                w.matrix, dense.topLeftCorner(w.matrix.rows(), w.matrix.cols())),
            1e-12);
  EXPECT_THROW(operatorWord(phi, "T?", blocks), ParseError);
}

TEST(OperatorLab, SelfCommutatorScalarClosedForm) {
  // phi = z + c conj(z): [T*, T] = (1 - |c|^2) e0 e0^T.
  Cplx c(0.5, 0.0);
  LaurentSymbol phi = LaurentSymbol::scalar({{1, 1.0}, {-1, c}});
  CommutatorResult r = selfCommutator(phi);
  ASSERT_EQ(r.supportBlocks, 1);
  EXPECT_NEAR(r.matrix(0, 0).real(), 0.75, 1e-15);
  EXPECT_EQ(r.rank, 1);
  EXPECT_LT(r.offSupportResidual, 1e-15);
  EXPECT_NEAR(r.minEigenvalue, 0.75, 1e-15);
}

TEST(OperatorLab, SelfCommutatorMatchesDenseOnNormalSymbols) {
  Rng rng(46);
  for (int trial = 0; trial < 5; ++trial) {
    int n = rng.integer(1, 3);
    LaurentSymbol phi =
        randomNormalSymbol(rng, n, rng.integer(1, 3), rng.integer(1, 3));
    CommutatorResult r = selfCommutator(phi);
    int s = r.supportBlocks;
    CMat want = btop_test::denseCommutatorCorner(phi, s, 4 * s + 4);
    EXPECT_LT(btop_test::maxAbsDiff(r.matrix, want), 1e-12);
    EXPECT_LT(r.offSupportResidual, 1e-12);
  }
}

TEST(OperatorLab, IdentitySuiteOnAsymmetricRandomSymbols) {
  Rng rng(47);
  for (int trial = 0; trial < 4; ++trial) {
    int n = rng.integer(1, 3);
    LaurentSymbol phi = randomSymbol(rng, n, rng.integer(0, 4), rng.integer(0, 4));
    LaurentSymbol psi = randomSymbol(rng, n, rng.integer(0, 4), rng.integer(0, 4));
    LaurentSymbol theta =
        randomPotapov(rng, n, 2, 0.0).fourier(3).symbol;
    IdentitySuiteReport rep = identitySuite(phi, psi, theta, 24);
    EXPECT_LT(rep.maxDeviation(), 1e-12);
  }
}

TEST(OperatorLab, ComposeTracksWindowAndBand) {
  Rng rng(48);
  LaurentSymbol phi = randomSymbol(rng, 2, 1, 2);
  LaurentSymbol psi = randomSymbol(rng, 2, 2, 1);
  TruncatedOperator a = toeplitz(phi, 10);
  TruncatedOperator b = toeplitz(psi, 10);
  TruncatedOperator ab = compose(a, b);
  EXPECT_EQ(ab.bandBlocks, a.bandBlocks + b.bandBlocks);
  EXPECT_LT(ab.exactWindow, 10);
  EXPECT_LT((ab.matrix - a.matrix * b.matrix).cwiseAbs().maxCoeff(), 1e-15);

  TruncatedOperator h = hankel(phi, 10);
  TruncatedOperator th = compose(adjoint(b), h);
  EXPECT_TRUE(h.exactEverywhere);
  EXPECT_EQ(th.exactWindow, 10);
  EXPECT_THROW(compose(a, toeplitz(psi, 6)), PreconditionError);
}

TEST(OperatorLab, StandinGateRespected) {
  LaurentSymbol phi = LaurentSymbol::scalar({{1, 1.0}, {-1, 0.5}});
  phi.setBoundedType(BoundedType::not_bounded_type_standin);
  EXPECT_THROW(toeplitz(phi, 4), PreconditionError);
  EXPECT_THROW(selfCommutator(phi), PreconditionError);
  EXPECT_NO_THROW(toeplitz(phi, 4, true));
}

TEST(OperatorLab, BinaryRoundTrip) {
  Rng rng(49);
  LaurentSymbol phi = randomSymbol(rng, 2, 1, 2);
  TruncatedOperator op = toeplitz(phi, 5);
  std::string path = testing::TempDir() + "btop_roundtrip.bin";
  writeOperatorBinary(op, path);
  TruncatedOperator back = readOperatorBinary(path);
  EXPECT_EQ(back.n, op.n);
  EXPECT_EQ(back.blocks, op.blocks);
  EXPECT_EQ(back.kind, op.kind);
  EXPECT_EQ((back.matrix - op.matrix).cwiseAbs().maxCoeff(), 0.0);
  std::remove(path.c_str());
}

TEST(OperatorLab, BinaryReaderRejectsGarbage) {
  std::string path = testing::TempDir() + "btop_garbage.bin";
  {
    std::ofstream f(path, std::ios::binary);
    f << "not an operator file";
  }
  EXPECT_THROW(readOperatorBinary(path), ParseError);
  {
    // Valid magic, absurd header.
    std::ofstream f(path, std::ios::binary);
    f << "BTOP";
    std::uint32_t header[3] = {0xffffffffu, 1u, 0u};
    f.write(reinterpret_cast<const char*>(header), sizeof header);
  }
  EXPECT_THROW(readOperatorBinary(path), ParseError);
  EXPECT_THROW(readOperatorBinary(path + ".missing"), ParseError);
  std::remove(path.c_str());
}

TEST(OperatorLab, CsvWriterShape) {
  LaurentSymbol phi = LaurentSymbol::scalar({{0, 1.0}});
  TruncatedOperator op = toeplitz(phi, 3);
  std::ostringstream out;
  writeOperatorCsv(op, out);
  std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(std::count(text.begin(), text.end(), ','), 3 * (2 * 3 - 1));
}

}  // namespace
