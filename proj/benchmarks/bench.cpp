#include <random>

#include <benchmark/benchmark.h>

#include "freecrit/checkers.hpp"
#include "freecrit/homotopy.hpp"
#include "freecrit/linalg.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

Field field_of(int64_t code) { return code == 0 ? Field::prime(101) : Field::rational(); }

Matrix dense(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

FreeComplex conjugated_koszul(const Field& f, std::size_t p, std::size_t b, std::mt19937_64& rng) {
  const auto& e = catalog()[4];
  FreeComplex k = koszul_power(make_algebra(e, f), e.vars, p, b);
  return conjugate(k, random_automorphism(k, rng));
}

void BM_Rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Matrix m = dense(field_of(state.range(1)), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Field f = field_of(state.range(1));
  Matrix a = dense(f, state.range(0), rng), b = dense(f, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_SolveHomotopy(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Field f = field_of(state.range(1));
  FreeComplex k = conjugated_koszul(f, 2, state.range(0), rng);
  ChainMap target = scalar_map(k, k.algebra()->parse("x + y"));
  for (auto _ : state) benchmark::DoNotOptimize(solve_homotopy(k, k, target));
}

void BM_DerivedAnnihilator(benchmark::State& state) {
  std::mt19937_64 rng(4);
  FreeComplex k = conjugated_koszul(field_of(state.range(2)), state.range(0), state.range(1), rng);
  for (auto _ : state) benchmark::DoNotOptimize(derived_annihilator(k));
}

void BM_KoszulDecompose(benchmark::State& state) {
  std::mt19937_64 rng(5);
  FreeComplex k = conjugated_koszul(field_of(state.range(1)), 2, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_decompose(k));
}

}  // namespace

// Second (or last) argument: 0 for GF(101), 1 for Q.
BENCHMARK(BM_Rref)->ArgsProduct({{16, 64, 128}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Multiply)->ArgsProduct({{16, 64, 128}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveHomotopy)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivedAnnihilator)->ArgsProduct({{1, 2, 3}, {1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KoszulDecompose)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
