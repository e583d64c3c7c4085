#include <benchmark/benchmark.h>

#include "sne/kmeans.hpp"
#include "sne/likelihood.hpp"
#include "sne/optimizer.hpp"
#include "sne/synthgen.hpp"

namespace {

sne::SyntheticInstance instance(int n) { return sne::gen_example1(n, 0.1, 42); }

void BM_NegLogLikelihood(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = instance(n);
    sne::FitConfig cfg;
    const auto s = sne::init_state(inst.network, cfg);
    const auto link = sne::LinkFunction::logit();
    for (auto _ : state)
        benchmark::DoNotOptimize(sne::neg_log_likelihood(inst.network, s, link));
    state.SetComplexityN(n);
}
BENCHMARK(BM_NegLogLikelihood)->Arg(100)->Arg(200)->Arg(500)->Complexity();

void BM_Gradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = instance(n);
    sne::FitConfig cfg;
    const auto s = sne::init_state(inst.network, cfg);
    const auto link = sne::LinkFunction::logit();
    for (auto _ : state)
        benchmark::DoNotOptimize(sne::likelihood_stats(inst.network, s, link));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Gradient)->Arg(100)->Arg(200)->Arg(500)->Complexity();

void BM_FitIteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = instance(n);
    sne::FitConfig cfg;
    cfg.max_iter = 5;
    cfg.tol = 1e-30; // force all iterations
    const auto link = sne::LinkFunction::logit();
    for (auto _ : state) benchmark::DoNotOptimize(sne::fit(inst.network, cfg, link));
}
BENCHMARK(BM_FitIteration)->Arg(100)->Arg(200);

void BM_KMeans(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = instance(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(sne::kmeans_embed(inst.truth.B_star, 4, 50, 7));
}
BENCHMARK(BM_KMeans)->Arg(200)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
