#include "btop/symbol_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>

#include "btop/generator.hpp"

using namespace btop;

namespace {

TEST(SymbolIo, SymbolRoundTripIsExact) {
  Rng rng(71);
  LaurentSymbol s = randomSymbol(rng, 3, 2, 4);
  LaurentSymbol back = parseSymbolJson(symbolToJson(s));
  EXPECT_EQ(back.dim(), 3);
  EXPECT_TRUE(back.approxEqual(s, 0.0));
  EXPECT_EQ(back.boundedType(), BoundedType::bounded);

  s.setBoundedType(BoundedType::not_bounded_type_standin);
  EXPECT_TRUE(parseSymbolJson(symbolToJson(s)).isStandin());
}

TEST(SymbolIo, SymbolFileRoundTrip) {
  Rng rng(72);
  LaurentSymbol s = randomSymbol(rng, 2, 1, 1);
  std::string path = testing::TempDir() + "btop_sym.json";
  saveSymbol(s, path);
  EXPECT_TRUE(loadSymbol(path).approxEqual(s, 0.0));
  std::remove(path.c_str());
  EXPECT_THROW(loadSymbol(path), ParseError);
}

TEST(SymbolIo, SymbolParserRejections) {
  EXPECT_THROW(parseSymbolJson("not json"), ParseError);
  EXPECT_THROW(parseSymbolJson("{}"), ParseError);
  EXPECT_THROW(parseSymbolJson(R"({"n": 0, "coeffs": []})"), ParseError);
  EXPECT_THROW(parseSymbolJson(R"({"n": 2000, "coeffs": []})"), ParseError);
  // Duplicate k.
  EXPECT_THROW(parseSymbolJson(R"({"n": 1, "coeffs": [
    {"k": 0, "re": [[1]], "im": [[0]]},
    {"k": 0, "re": [[2]], "im": [[0]]}]})"),
               ParseError);
  // Shape mismatch.
  EXPECT_THROW(parseSymbolJson(R"({"n": 2, "coeffs": [
    {"k": 0, "re": [[1]], "im": [[0]]}]})"),
               ParseError);
  // Ragged rows.
  EXPECT_THROW(parseSymbolJson(R"({"n": 2, "coeffs": [
    {"k": 0, "re": [[1, 2], [3]], "im": [[0, 0], [0, 0]]}]})"),
               ParseError);
}

TEST(SymbolIo, PotapovRoundTrip) {
  Rng rng(73);
  PotapovProduct q = randomPotapov(rng, 2, 3, 0.6);
  PotapovProduct back = parsePotapovJson(potapovToJson(q));
  ASSERT_EQ(back.factorCount(), 3);
  for (int m = 0; m < 6; ++m) {
    double t = 2.0 * std::numbers::pi * m / 6;
    Cplx z(std::cos(t), std::sin(t));
    EXPECT_LT((back.valueAt(z) - q.valueAt(z)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(SymbolIo, PotapovParserRejections) {
  EXPECT_THROW(parsePotapovJson("[]"), ParseError);
  // Non-unitary leading matrix.
  EXPECT_THROW(parsePotapovJson(R"({"v": {"re": [[2]], "im": [[0]]},
                                    "factors": []})"),
               PreconditionError);
  // alpha outside the disc.
  EXPECT_THROW(parsePotapovJson(R"({"v": {"re": [[1]], "im": [[0]]},
    "factors": [{"alpha": {"re": 1.5, "im": 0},
                 "P": {"re": [[1]], "im": [[0]]}}]})"),
               PreconditionError);
}

TEST(SymbolIo, ConfigRoundTripAndOverrides) {
  RunConfig base;
  base.nTrunc = 48;
  RunConfig c = parseConfigJson(R"({"k_max": 2, "seed": 99})", base);
  EXPECT_EQ(c.nTrunc, 48);
  EXPECT_EQ(c.kMax, 2);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.tolPsd, base.tolPsd);

  RunConfig back = parseConfigJson(configToJson(c));
  EXPECT_EQ(back.nTrunc, c.nTrunc);
  EXPECT_EQ(back.kMax, c.kMax);
  EXPECT_EQ(back.tolCoeff, c.tolCoeff);
  EXPECT_EQ(back.allowStandin, c.allowStandin);

  EXPECT_THROW(parseConfigJson(R"({"n_trunk": 12})"), ParseError);
  EXPECT_THROW(parseConfigJson(R"({"n_trunc": -4})"), ParseError);
}

}  // namespace
