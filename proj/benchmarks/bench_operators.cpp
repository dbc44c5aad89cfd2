#include <benchmark/benchmark.h>

#include "btop/classify.hpp"
#include "btop/generator.hpp"
#include "btop/model_space.hpp"
#include "btop/operator_lab.hpp"

using namespace btop;

namespace {

LaurentSymbol fixedSymbol(int n, int degMinus, int degPlus) {
  Rng rng(7);
  return randomSymbol(rng, n, degMinus, degPlus);
}

void BM_ToeplitzFill(benchmark::State& state) {
  LaurentSymbol phi = fixedSymbol(3, 4, 4);
  int blocks = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedOperator t = toeplitz(phi, blocks);
    benchmark::DoNotOptimize(t.matrix.data());
  }
}
BENCHMARK(BM_ToeplitzFill)->Arg(64)->Arg(256);

void BM_SymbolProduct(benchmark::State& state) {
  int deg = static_cast<int>(state.range(0));
  LaurentSymbol a = fixedSymbol(3, deg, deg);
  LaurentSymbol b = fixedSymbol(3, deg, deg);
  for (auto _ : state) {
    LaurentSymbol c = a * b;
    benchmark::DoNotOptimize(c.coeff(0).data());
  }
}
BENCHMARK(BM_SymbolProduct)->Arg(4)->Arg(32);

void BM_IdentitySuite(benchmark::State& state) {
  Rng rng(7);
  LaurentSymbol phi = randomSymbol(rng, 2, 3, 3);
  LaurentSymbol psi = randomSymbol(rng, 2, 3, 3);
  LaurentSymbol theta = randomPotapov(rng, 2, 2).fourier(3).symbol;
  int blocks = static_cast<int>(state.range(0));
  for (auto _ : state) {
    IdentitySuiteReport rep = identitySuite(phi, psi, theta, blocks);
    benchmark::DoNotOptimize(rep.maxDeviation());
  }
}
BENCHMARK(BM_IdentitySuite)->Arg(32)->Arg(64);

void BM_SelfCommutator(benchmark::State& state) {
  int deg = static_cast<int>(state.range(0));
  Rng rng(7);
  LaurentSymbol phi = randomNormalSymbol(rng, 3, deg, deg);
  for (auto _ : state) {
    CommutatorResult c = selfCommutator(phi);
    benchmark::DoNotOptimize(c.minEigenvalue);
  }
}
BENCHMARK(BM_SelfCommutator)->Arg(4)->Arg(16)->Arg(64);

void BM_KLadder(benchmark::State& state) {
  Rng rng(7);
  InnerSymmetricInstance inst = innerSymmetricInstance(rng, 2, 2, 2);
  RunConfig cfg;
  int kMax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto steps = kHyponormality(inst.phi, kMax, cfg);
    benchmark::DoNotOptimize(steps.back().minEigenvalue);
  }
}
BENCHMARK(BM_KLadder)->Arg(2)->Arg(4);

void BM_ModelSpace(benchmark::State& state) {
  Rng rng(7);
  PotapovProduct q = randomPotapov(rng, 3, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) {
    ModelSpaceBasis basis = modelSpace(q, q.factorCount() + 2, 1e-10);
    benchmark::DoNotOptimize(basis.vectors.data());
  }
}
BENCHMARK(BM_ModelSpace)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
