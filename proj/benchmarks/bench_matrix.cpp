#include <benchmark/benchmark.h>

#include <random>

#include "commlip/campaign.hpp"
#include "commlip/matrix_lab.hpp"

namespace {

using commlip::CMatrix;

CMatrix random_psd(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    return m * m.adjoint() / static_cast<double>(n);
}

void BM_ConjectureRatio(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const CMatrix A = random_psd(n, rng);
    const CMatrix B = random_psd(n, rng);
    const CMatrix X = random_psd(n, rng);
    const auto f = [](double x) { return x / (x + 1.0); };
    const auto kind = commlip::NormKind::operator_norm();
    for (auto _ : state) {
        benchmark::DoNotOptimize(commlip::verify_conjecture_ratio(A, B, X, f, kind));
    }
}
BENCHMARK(BM_ConjectureRatio)->Arg(2)->Arg(6)->Arg(16);

void BM_SmallCampaign(benchmark::State& state)
{
    commlip::CampaignConfig cfg;
    cfg.trials = 1000;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(commlip::monte_carlo_campaign(cfg));
    }
}
BENCHMARK(BM_SmallCampaign)->Unit(benchmark::kMillisecond);

} // namespace
