// Serial vs OpenMP sieve on a few representative forms.

#include <benchmark/benchmark.h>

#include "pentaform/lattice.hpp"
#include "pentaform/oracle.hpp"

using namespace pentaform;

namespace {

const FormParams kForms[] = {
    make_params(1, 1, 5, 0, 0),
    make_params(5, 9, 9, 2, 2),
    make_params(3, 3, 1, 1, 4),
};

void BM_Serial(benchmark::State& state) {
    const auto& p = kForms[state.range(0)];
    const i64 N = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(represented_bitmap(p, N, SieveBackend::Serial));
    state.SetItemsProcessed(state.iterations() * N);
}

void BM_OpenMP(benchmark::State& state) {
    const auto& p = kForms[state.range(0)];
    const i64 N = state.range(1);
    const int threads = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(represented_bitmap(p, N, SieveBackend::OpenMP, threads));
    state.SetItemsProcessed(state.iterations() * N);
}

}  // namespace

BENCHMARK(BM_Serial)->ArgsProduct({{0, 1, 2}, {200'000, 1'000'000, 10'000'000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)
    ->ArgsProduct({{0, 1, 2}, {200'000, 1'000'000, 10'000'000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
