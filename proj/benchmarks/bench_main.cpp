#include <benchmark/benchmark.h>

#include <vector>

#include "schur/engine.hpp"
#include "schur/jury.hpp"
#include "schur/poly.hpp"
#include "schur/region.hpp"
#include "schur/roots.hpp"

namespace {

using schur::Backend;
using schur::MonicPolynomial;
using schur::Rational;
using schur::Scalar;

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

// x^5 + 1/2 x^4 - 1/2 x - 1/2: certifies at stage 4.
MonicPolynomial deg5() {
  return MonicPolynomial({q(-1, 2), q(-1, 2), q(0), q(0), q(1, 2)});
}

// Degree 8, inside the norm ball so every stage stays cheap.
MonicPolynomial deg8() {
  return MonicPolynomial({q(1, 16), q(-1, 8), q(1, 16), q(0), q(-1, 4), q(1, 8),
                          q(-1, 16), q(1, 4)});
}

void BM_RunAlgorithm(benchmark::State& state) {
  const MonicPolynomial p = deg5();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::run_algorithm(p));
  }
}
BENCHMARK(BM_RunAlgorithm);

void BM_IterateStage(benchmark::State& state) {
  const MonicPolynomial p = deg8();
  const schur::StageTrace first = schur::initial_stage(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::iterate_stage(first, p));
  }
}
BENCHMARK(BM_IterateStage);

void BM_JuryDeg5(benchmark::State& state) {
  const MonicPolynomial p = deg5();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::jury_table(p));
  }
}
BENCHMARK(BM_JuryDeg5);

void BM_JuryDeg8(benchmark::State& state) {
  const MonicPolynomial p = deg8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::jury_table(p));
  }
}
BENCHMARK(BM_JuryDeg8);

void BM_FindRoots(benchmark::State& state) {
  const MonicPolynomial p = deg8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::find_roots(p));
  }
}
BENCHMARK(BM_FindRoots);

void BM_ScanQuadratic(benchmark::State& state) {
  schur::GridSpec spec;
  spec.mapping = "quadratic-alpha-beta";
  spec.x_axis = {"alpha", Rational(-5, 2), Rational(5, 2), 50};
  spec.y_axis = {"beta", Rational(-3, 2), Rational(3, 2), 30};
  spec.max_stages = 2;
  spec.backend = state.range(0) == 0 ? Backend::exact : Backend::floating;
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::scan_region(spec));
  }
}
BENCHMARK(BM_ScanQuadratic)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
