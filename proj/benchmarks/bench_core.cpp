#include <benchmark/benchmark.h>

#include "burgess/modular.hpp"
#include "burgess/pipeline.hpp"
#include "burgess/sums.hpp"
#include "burgess/vinogradov.hpp"

namespace {

void BM_ModulusConstruction(benchmark::State& state) {
    auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        burgess::PrimeModulus mod(q);
        benchmark::DoNotOptimize(mod.g());
    }
}
BENCHMARK(BM_ModulusConstruction)->Arg(1009)->Arg(10007)->Arg(104729);

void BM_MixedSum(benchmark::State& state) {
    auto chi = burgess::make_character(10007, 5);
    auto f = burgess::PhasePolynomial::rational({1, 3, 7}, 10007);
    auto H = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(burgess::mixed_sum(chi, f, 17, H).magnitude);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MixedSum)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CompleteSum(benchmark::State& state) {
    auto chi = burgess::make_character(static_cast<std::uint32_t>(state.range(0)), 3);
    const std::int64_t x[4] = {1, 2, 3, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(burgess::complete_sum(chi, x).magnitude);
    }
}
BENCHMARK(BM_CompleteSum)->Arg(101)->Arg(1009)->Arg(10007);

void BM_CountJBruteforce(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(burgess::count_J_bruteforce(2, 2, state.range(0)));
    }
}
BENCHMARK(BM_CountJBruteforce)->Arg(6)->Arg(10)->Arg(14);

void BM_CountJMitm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(burgess::count_J_mitm(2, 2, state.range(0)));
    }
}
BENCHMARK(BM_CountJMitm)->Arg(6)->Arg(14)->Arg(50)->Arg(200);

void BM_CountProfile(benchmark::State& state) {
    for (auto _ : state) {
        auto prof = burgess::count_profile(0, 159, state.range(0), 10007);
        benchmark::DoNotOptimize(prof.s2);
    }
}
BENCHMARK(BM_CountProfile)->Arg(2)->Arg(8)->Arg(32);

} // namespace

BENCHMARK_MAIN();
