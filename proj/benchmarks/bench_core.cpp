#include <benchmark/benchmark.h>

#include "commlip/core_approx.hpp"
#include "commlip/optimizer.hpp"

namespace {

void BM_ErfMinBound(benchmark::State& state)
{
    const commlip::GaussianParams p{0.2561, 0.06616};
    for (auto _ : state) {
        benchmark::DoNotOptimize(commlip::erf_min_bound(1.0, p));
    }
}
BENCHMARK(BM_ErfMinBound);

void BM_OptimizeSingleNode(benchmark::State& state)
{
    const std::vector<double> grid{1.0};
    commlip::GridOptions cfg;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(commlip::optimize_grid(grid, cfg));
    }
}
BENCHMARK(BM_OptimizeSingleNode)->Unit(benchmark::kMillisecond);

} // namespace
