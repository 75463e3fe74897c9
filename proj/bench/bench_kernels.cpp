// Serial reference vs OpenMP kernels on square max-plus / max-min matrices.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "semires/kernels.hpp"

namespace {

using semires::Scalar;
using semires::SemiringTag;
namespace kernels = semires::kernels;

std::vector<Scalar> random_entries(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar::value_type> dist(-1000, 1000);
    std::vector<Scalar> out(n);
    for (auto& s : out) {
        s = Scalar::finite(dist(rng));
    }
    return out;
}

template <auto Kernel>
void run(benchmark::State& state, SemiringTag tag)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n * n, 1);
    const auto b = random_entries(n * n, 2);
    std::vector<Scalar> out(n * n);
    for (auto _ : state) {
        Kernel(tag, a, {n, n}, b, {n, n}, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_ProductSerial(benchmark::State& s) { run<kernels::serial::product>(s, SemiringTag::MaxPlus); }
void BM_ProductParallel(benchmark::State& s) { run<kernels::parallel::product>(s, SemiringTag::MaxPlus); }
void BM_LeftResidualSerial(benchmark::State& s) { run<kernels::serial::left_residual>(s, SemiringTag::MaxPlus); }
void BM_LeftResidualParallel(benchmark::State& s) { run<kernels::parallel::left_residual>(s, SemiringTag::MaxPlus); }
void BM_RightResidualSerial(benchmark::State& s) { run<kernels::serial::right_residual>(s, SemiringTag::MaxMin); }
void BM_RightResidualParallel(benchmark::State& s)
{
    run<kernels::parallel::right_residual>(s, SemiringTag::MaxMin);
}

}  // namespace

BENCHMARK(BM_ProductSerial)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_ProductParallel)->RangeMultiplier(2)->Range(32, 512)->Complexity()->UseRealTime();
BENCHMARK(BM_LeftResidualSerial)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_LeftResidualParallel)->RangeMultiplier(2)->Range(32, 512)->Complexity()->UseRealTime();
BENCHMARK(BM_RightResidualSerial)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_RightResidualParallel)->RangeMultiplier(2)->Range(32, 512)->Complexity()->UseRealTime();

BENCHMARK_MAIN();
