#include <benchmark/benchmark.h>

#include "qpest/qpest.hpp"

using namespace qpest;

namespace {

const ScaleMap kScale = ScaleMap::from_prior(1e8, 1.0);

ProtocolConfig config_for(int digits, double error_p, ECStrategy ec = ECStrategy::none()) {
    ProtocolConfig config;
    config.digit_count = digits;
    config.scale = kScale;
    config.tau_m = 1e-6;
    config.error_p = error_p;
    config.ec = std::move(ec);
    config.seed = 7;
    return config;
}

}  // namespace

static void LikelihoodProduct(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto result = DigitString::from_index((1ull << m) / 3, m);
    double s = 0.2137;
    for (auto _ : state) {
        benchmark::DoNotOptimize(likelihood_product(s, result));
        s += 1e-9;
    }
}
BENCHMARK(LikelihoodProduct)->Arg(8)->Arg(16);

static void LikelihoodClosedForm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto result = DigitString::from_index((1ull << m) / 3, m);
    double s = 0.2137;
    for (auto _ : state) {
        benchmark::DoNotOptimize(likelihood_closed_form(s, result));
        s += 1e-9;
    }
}
BENCHMARK(LikelihoodClosedForm)->Arg(8)->Arg(16);

static void PosteriorUpdate(benchmark::State& state) {
    const auto prior = PriorDistribution::uniform(static_cast<std::size_t>(state.range(0)));
    const auto result = DigitString::from_index(113, 8);
    for (auto _ : state) benchmark::DoNotOptimize(posterior_update(prior, result).mean);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PosteriorUpdate)->Range(512, 8192)->Complexity(benchmark::oN);

static void AverageVarianceExact(benchmark::State& state) {
    const auto prior = PriorDistribution::uniform(1024);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(average_variance(prior, m));
}
BENCHMARK(AverageVarianceExact)->Arg(8)->Arg(10);

static void NoisyRun(benchmark::State& state) {
    const auto config = config_for(static_cast<int>(state.range(0)), 1e-2);
    RandomStream rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(run_noisy(0.2137, config, rng).decoded.index());
}
BENCHMARK(NoisyRun)->Arg(8)->Arg(16);

static void NoisyRunTiered(benchmark::State& state) {
    const auto config =
        config_for(static_cast<int>(state.range(0)), 1e-2, ECStrategy::standard_tiered());
    RandomStream rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(run_noisy(0.2137, config, rng).decoded.index());
}
BENCHMARK(NoisyRunTiered)->Arg(8)->Arg(16);

static void TrajectorySynthesis(benchmark::State& state) {
    const auto process = BathProcess::gaussian(1e8, 1e-3);
    RandomStream rng(5);
    const double dt = 1e-3 / static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_trajectory(process, 1e-3, dt, rng).samples.back());
}
BENCHMARK(TrajectorySynthesis)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
