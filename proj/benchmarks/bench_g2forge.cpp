#include <benchmark/benchmark.h>

#include "g2forge/aw.hpp"
#include "g2forge/cubic.hpp"
#include "g2forge/pairing.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using F = Form<Rational>;

static void BM_Wedge(benchmark::State& state) {
  Sampler rng(1, "bench-wedge");
  const F a = rng.form(static_cast<int>(state.range(0)), 1.0);
  const F b = rng.form(static_cast<int>(7 - state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->DenseRange(1, 3);

static void BM_Hodge(benchmark::State& state) {
  const F& psi = G2Frame<Rational>::instance().psi();
  for (auto _ : state) benchmark::DoNotOptimize(hodge(psi));
}
BENCHMARK(BM_Hodge);

static void BM_FrameBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambda2_operator());
}
BENCHMARK(BM_FrameBuild);

static void BM_B2Solve(benchmark::State& state) {
  Sampler rng(2, "bench-b2");
  const F a1 = rng.form(4), a2 = rng.form(4);
  for (auto _ : state) benchmark::DoNotOptimize(b2_full(a1, a2));
}
BENCHMARK(BM_B2Solve)->Unit(benchmark::kMillisecond);

static void BM_Q2Closed(benchmark::State& state) {
  Sampler rng(3, "bench-q2");
  const F a = G2Frame<Rational>::instance().project4(rng.form(4)).a27;
  for (auto _ : state) benchmark::DoNotOptimize(Q2_27(a));
}
BENCHMARK(BM_Q2Closed)->Unit(benchmark::kMillisecond);

static void BM_PermanentNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler rng(4, "bench-perm");
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  for (auto _ : state) benchmark::DoNotOptimize(permanent_naive(m));
}
BENCHMARK(BM_PermanentNaive)->DenseRange(3, 7);

static void BM_PermanentRyser(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler rng(4, "bench-perm");
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(m));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(3, 7);

static void BM_PFirstPrinciples(benchmark::State& state) {
  const auto xi = Su3Element<Rational>::from_coordinates({1, 2, -1, 3, 1, -2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(P_first_principles(xi));
}
BENCHMARK(BM_PFirstPrinciples)->Unit(benchmark::kMillisecond);

static void BM_PApprox(benchmark::State& state) {
  const auto xi = lift<ApproxScalar>(Su3Element<Rational>::from_coordinates({1, 2, -1, 3, 1, -2, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(P_of_xi(xi));
}
BENCHMARK(BM_PApprox)->Unit(benchmark::kMicrosecond);

static void BM_Haar(benchmark::State& state) {
  const auto xi = haar_test_elements().front();
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_average_check(xi, samples, 1, PSource::first_principles, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples));
}
BENCHMARK(BM_Haar)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
