#include <benchmark/benchmark.h>

#include "semistab/direct_sum.hpp"
#include "semistab/lattice.hpp"
#include "semistab/mode_operator.hpp"
#include "semistab/numlin.hpp"
#include "semistab/rng.hpp"
#include "semistab/shift_block.hpp"

using namespace semistab;

namespace {

CMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.gaussian_complex();
    return a;
}

void BM_OpNorm2(benchmark::State& state) {
    const CMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(numlin::op_norm2(a));
}
BENCHMARK(BM_OpNorm2)->Arg(16)->Arg(64)->Arg(128);

void BM_ShiftResolventNorm(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const Complex lambda{1.0, 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(numlin::op_norm2(shiftblock::shift_resolvent(m, lambda)));
}
BENCHMARK(BM_ShiftResolventNorm)->Arg(16)->Arg(64)->Arg(128);

void BM_Expm(benchmark::State& state) {
    const CMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(numlin::expm(a, 1.0));
}
BENCHMARK(BM_Expm)->Arg(8)->Arg(32);

void BM_BmResolvent(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const modeop::ModeOperator op{m};
    const Complex lambda{1.0, static_cast<double>(m)};
    for (auto _ : state) benchmark::DoNotOptimize(modeop::bm_resolvent_norm(op, lambda));
}
BENCHMARK(BM_BmResolvent)->Arg(16)->Arg(64);

void BM_BlowupScan(benchmark::State& state) {
    const directsum::DirectSumOperator op{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(directsum::blowup_scan(op));
}
BENCHMARK(BM_BlowupScan)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_KrivineSuite(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice::krivine_suite(static_cast<std::size_t>(state.range(0)), 7));
}
BENCHMARK(BM_KrivineSuite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
