#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "tmc/abelian.hpp"
#include "tmc/frames.hpp"
#include "tmc/pairs.hpp"
#include "tmc/thue_morse.hpp"

namespace {

using namespace tmc;

void BM_complexity_fast(benchmark::State& state) {
    std::uint64_t n = std::uint64_t(1) << state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(complexity_fast(n + 7));
    }
}
BENCHMARK(BM_complexity_fast)->DenseRange(10, 60, 10);

void BM_complexity_brute(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    complexity_fast(0);  // trigger the one-time self check outside timing
    for (auto _ : state) {
        benchmark::DoNotOptimize(complexity_brute(n, 2));
    }
}
BENCHMARK(BM_complexity_brute)->RangeMultiplier(4)->Range(16, 1024);

void BM_enumerate_factors(benchmark::State& state) {
    std::size_t n = state.range(0);
    for (auto _ : state) {
        auto fs = enumerate_factors(n);
        benchmark::DoNotOptimize(fs->size());
    }
    state.SetLabel("warm cache after first iteration");
}
BENCHMARK(BM_enumerate_factors)->RangeMultiplier(4)->Range(16, 4096);

void BM_merf(benchmark::State& state) {
    auto factors = enumerate_factors(state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(merf(factors->members()[i]));
        i = (i + 1) % factors->size();
    }
}
BENCHMARK(BM_merf)->Arg(12)->Arg(24)->Arg(48);

void BM_pairs_window(benchmark::State& state) {
    std::uint64_t lo = std::uint64_t(1) << 40;
    std::uint64_t width = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairs_window(lo, lo + width));
    }
}
BENCHMARK(BM_pairs_window)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

void BM_class_of(benchmark::State& state) {
    Word w = tm_prefix(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(class_of(w));
    }
}
BENCHMARK(BM_class_of)->Arg(64)->Arg(4096)->Arg(1 << 16);

void BM_coding_roundtrip(benchmark::State& state) {
    Word w = tm_prefix(state.range(0));
    for (auto _ : state) {
        ShortCoding c = short_coding(w);
        benchmark::DoNotOptimize(decode_short_coding(c, w.first()));
    }
}
BENCHMARK(BM_coding_roundtrip)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
