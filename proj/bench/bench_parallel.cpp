#include <benchmark/benchmark.h>

#include <random>

#include "ramify/dvr_matrix.hpp"
#include "ramify/suites.hpp"

using namespace ramify;

namespace {

DVRMatrix random_matrix(const DVRSpec& spec, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, static_cast<int>(spec.order()) - 1);
    DVRMatrix m(spec, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<DVRElement::Digit> d(spec.precision());
            for (auto& x : d) x = static_cast<DVRElement::Digit>(digit(rng));
            m(i, j) = DVRElement::from_digits(spec, d);
        }
    return m;
}

void BM_SmithParallel(benchmark::State& state) {
    const auto spec = DVRSpec::mixed_char(3, 16);
    const DVRMatrix m = random_matrix(spec, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith(m));
}

void BM_SmithSerial(benchmark::State& state) {
    const auto spec = DVRSpec::mixed_char(3, 16);
    const DVRMatrix m = random_matrix(spec, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_reference(m));
}

void BM_SuiteParallel(benchmark::State& state, const char* suite) {
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, SuiteConfig{7, 20}, true));
}

void BM_SuiteSerial(benchmark::State& state, const char* suite) {
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, SuiteConfig{7, 20}, false));
}

}  // namespace

BENCHMARK(BM_SmithParallel)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmithSerial)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteParallel, appendix_a, "appendix-a")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteSerial, appendix_a, "appendix-a")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteParallel, eq_1_2, "eq-1-2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteSerial, eq_1_2, "eq-1-2")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
