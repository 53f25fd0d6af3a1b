#include <benchmark/benchmark.h>

#include <random>

#include "rhlab/case_a1.hpp"
#include "rhlab/geom_core.hpp"
#include "rhlab/resultant.hpp"
#include "rhlab/ricci_bound.hpp"
#include "rhlab/twohopf_ode.hpp"

using namespace rhlab;

namespace {

ShapeState random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2, 2);
  const int dim = 2 * n - 1;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = u(rng);
  return ShapeState::from_upper(AdaptedFrame::standard(n), m);
}

Vector random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector x(dim);
  for (int i = 0; i < dim; ++i) x(i) = g(rng);
  return x.normalized();
}

void BM_RicciDirect(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(st.range(0));
  const ShapeState s = random_state(rng, n);
  const SpaceFormParams sf(n, 1.0);
  const Vector x = random_unit(rng, 2 * n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(ricci_direct(s, sf, x));
}
BENCHMARK(BM_RicciDirect)->Arg(2)->Arg(3)->Arg(5);

void BM_RicciTensorSum(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(st.range(0));
  const ShapeState s = random_state(rng, n);
  const SpaceFormParams sf(n, 1.0);
  const Vector x = random_unit(rng, 2 * n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(ricci_tensor_sum(s, sf, x));
}
BENCHMARK(BM_RicciTensorSum)->Arg(2)->Arg(3)->Arg(5);

void BM_UpperBound(benchmark::State& st) {
  std::mt19937_64 rng(2);
  const ShapeState s = random_state(rng, 2);
  const SpaceFormParams sf(2, -1.0);
  const Vector x = random_unit(rng, 3);
  for (auto _ : st) benchmark::DoNotOptimize(ricci_upper_bound(s, sf, x));
}
BENCHMARK(BM_UpperBound);

void BM_IntegrateTanProfile(benchmark::State& st) {
  const double k = std::sqrt(27.0);
  const TwoHopfSystem sys(8.0);
  const auto start = TwoHopfState::constant_alpha(-7, k * std::tan(k * 0.05), 1, 0.05);
  const double step = 1.0 / static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sys.integrate(start, 0.05, 0.28, step));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(0.23 / step));
}
BENCHMARK(BM_IntegrateTanProfile)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_EliminationResultant(benchmark::State& st) {
  const CaseA1System sys = build_case_a1_system();
  for (auto _ : st) benchmark::DoNotOptimize(sylvester_resultant(sys.eq9, sys.eq7, kBeta));
}
BENCHMARK(BM_EliminationResultant)->Unit(benchmark::kMillisecond);

void BM_DeriveGAndP(benchmark::State& st) {
  const RationalPoly f = printed_f();
  for (auto _ : st) benchmark::DoNotOptimize(derive_g_and_p(f));
}
BENCHMARK(BM_DeriveGAndP)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
