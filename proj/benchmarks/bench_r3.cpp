#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "r3/bislice.hpp"
#include "r3/cauchy.hpp"
#include "r3/clifford3.hpp"
#include "r3/qdet.hpp"
#include "r3/qsplit.hpp"
#include "r3/zeros.hpp"

using namespace r3;

namespace {

std::mt19937_64 rng(2024);

double uniform() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }

Element random_element() {
  Element x;
  for (std::size_t i = 0; i < kBladeCount; ++i) x[i] = uniform();
  return x;
}

Quat random_unit() {
  Quat q{0, uniform(), uniform(), uniform()};
  return q / q.abs();
}

Element random_cone_element() {
  return cone_point(uniform(), std::abs(uniform()), random_unit(), random_unit()).element();
}

BiSlicePoly random_poly(int degree) {
  std::vector<Element> c;
  for (int n = 0; n <= degree; ++n) c.push_back(random_element());
  return BiSlicePoly(std::move(c));
}

}  // namespace

static void BM_CliffordProduct(benchmark::State& state) {
  const Element x = random_element(), y = random_element();
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_CliffordProduct);

static void BM_SplitJoin(benchmark::State& state) {
  const Element x = random_element();
  for (auto _ : state) benchmark::DoNotOptimize(join(split(x)));
}
BENCHMARK(BM_SplitJoin);

static void BM_Determinant(benchmark::State& state) {
  const Matrix2 A(random_cone_element(), random_cone_element(), random_cone_element(), random_cone_element());
  for (auto _ : state) benchmark::DoNotOptimize(det(A));
}
BENCHMARK(BM_Determinant);

static void BM_StarProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BiSlicePoly f = random_poly(d), g = random_poly(d);
  for (auto _ : state) benchmark::DoNotOptimize(star_mul(f, g));
}
BENCHMARK(BM_StarProduct)->Arg(2)->Arg(8)->Arg(32);

static void BM_ClassifyQuadratic(benchmark::State& state) {
  const Element a = random_cone_element(), b = random_cone_element();
  for (auto _ : state) benchmark::DoNotOptimize(classify_quadratic(a, b));
}
BENCHMARK(BM_ClassifyQuadratic);

static void BM_CauchyReconstruct(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  const BiSlicePoly P = random_poly(5);
  const SliceContour cI(0, 2, random_unit(), nodes), cJ(0, 2, random_unit(), nodes);
  const Element x = cone_point(0.3, 0.5, random_unit(), random_unit()).element();
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_reconstruct(P, cI, cJ, x));
}
BENCHMARK(BM_CauchyReconstruct)->Arg(256)->Arg(512);
BENCHMARK_MAIN();
