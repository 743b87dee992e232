#include <vector>

#include <benchmark/benchmark.h>

#include "spinlift/spinlift.hpp"

namespace {

using namespace spinlift;

constexpr int kPool = 64;

std::vector<Bivector> nonsimple_pool(const Metric& g) {
  Sampler s(7);
  std::vector<Bivector> out;
  while (out.size() < kPool) {
    const Bivector l = s.bivector(g);
    if (!is_simple(l)) out.push_back(l);
  }
  return out;
}

std::vector<LorentzTransformation> transform_pool(const Metric& g) {
  Sampler s(8);
  std::vector<LorentzTransformation> out;
  for (int i = 0; i < kPool; ++i) out.push_back(s.transformation(g));
  return out;
}

template <class Rep>
void BM_SpinRep(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  const auto pool = nonsimple_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spin_rep(rep, pool[i++ % pool.size()]));
  }
}

void BM_OrthogonalDecompose(benchmark::State& state) {
  const Metric g;
  const auto pool = nonsimple_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthogonal_decompose(pool[i++ % pool.size()]));
  }
}

template <class Rep>
void BM_ExpPolynomial(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  const auto pool = nonsimple_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_spin_polynomial(pool[i++ % pool.size()], rep));
  }
}

template <class Rep>
void BM_ExpFactored(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  const auto pool = nonsimple_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_spin_factored(pool[i++ % pool.size()], rep));
  }
}

template <class Rep>
void BM_ExpSeries(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  std::vector<typename Rep::Matrix> images;
  for (const Bivector& l : nonsimple_pool(g)) images.push_back(spin_rep(rep, l));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_series(images[i++ % images.size()]));
  }
}

void BM_FactorTransform(benchmark::State& state) {
  const Metric g;
  const auto pool = transform_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_transform(pool[i++ % pool.size()]));
  }
}

template <class Rep>
void BM_Lift(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  const auto pool = transform_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift(pool[i++ % pool.size()], rep).value);
  }
}

// Lift through the factorization, for comparison with the four-term formula.
template <class Rep>
void BM_LiftViaFactors(benchmark::State& state) {
  const Metric g;
  const Rep rep(g);
  const auto pool = transform_pool(g);
  std::size_t i = 0;
  for (auto _ : state) {
    const FactorPair f = factor_transform(pool[i++ % pool.size()]);
    benchmark::DoNotOptimize((lift(f.lambda_plus, rep).value * lift(f.lambda_minus, rep).value).eval());
  }
}

}  // namespace

BENCHMARK(BM_SpinRep<GammaRep>);
BENCHMARK(BM_SpinRep<RegularRep>);
BENCHMARK(BM_OrthogonalDecompose);
BENCHMARK(BM_ExpPolynomial<GammaRep>);
BENCHMARK(BM_ExpPolynomial<RegularRep>);
BENCHMARK(BM_ExpFactored<GammaRep>);
BENCHMARK(BM_ExpFactored<RegularRep>);
BENCHMARK(BM_ExpSeries<GammaRep>);
BENCHMARK(BM_ExpSeries<RegularRep>);
BENCHMARK(BM_FactorTransform);
BENCHMARK(BM_Lift<GammaRep>);
BENCHMARK(BM_Lift<RegularRep>);
BENCHMARK(BM_LiftViaFactors<GammaRep>);
BENCHMARK(BM_LiftViaFactors<RegularRep>);
BENCHMARK_MAIN();
