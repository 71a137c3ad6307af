// Microbenchmarks for the hot paths: basis completion, smoothness
// certification, homology, and the candidate sweep.

#include <benchmark/benchmark.h>

#include <grodeg/corpus.hpp>
#include <grodeg/groebner.hpp>
#include <grodeg/hilbert.hpp>
#include <grodeg/geometry.hpp>
#include <grodeg/search.hpp>
#include <grodeg/simplicial.hpp>

using namespace grodeg;

namespace {

const Field kQQ = Field::rationals();
const Field kF2 = Field::prime(2);
const MonomialOrder kLex = MonomialOrder::lex();

void BM_BuchbergerRationalNormalCurve(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Ideal ideal = rational_normal_curve(kQQ, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(reduced_basis(buchberger(ideal, kLex)));
}
BENCHMARK(BM_BuchbergerRationalNormalCurve)->DenseRange(3, 6);

void BM_SmoothnessTwistedCubic(benchmark::State& state) {
  Ideal ideal = rational_normal_curve(kQQ, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_smooth_projective_curve(ideal));
}
BENCHMARK(BM_SmoothnessTwistedCubic);

void BM_GenusStarExample(benchmark::State& state) {
  Ideal ideal = star_example(kQQ);
  for (auto _ : state) benchmark::DoNotOptimize(genus(ideal, kLex));
}
BENCHMARK(BM_GenusStarExample);

void BM_HomologyCycle(benchmark::State& state) {
  SimplicialComplex cx =
      cycle_graph(static_cast<int>(state.range(0))).as_complex();
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(cx, kF2));
}
BENCHMARK(BM_HomologyCycle)->Arg(6)->Arg(10);

void BM_ConnectedGraphCensus(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedGraphCensus)->Arg(5)->Arg(6);

void BM_SweepTriangleF2(benchmark::State& state) {
  auto fam = CandidateFamily::exhaustive_grid(triangle_graph().as_complex(),
                                              kLex, kF2, full_grid(kF2));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_non_tree_is_singular(triangle_graph(), fam));
}
BENCHMARK(BM_SweepTriangleF2);

void BM_GradedDimension(benchmark::State& state) {
  Ideal ideal = rational_normal_curve(kQQ, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_graded_dimension(ideal, state.range(0)));
}
BENCHMARK(BM_GradedDimension)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
