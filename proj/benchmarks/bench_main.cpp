#include <benchmark/benchmark.h>

#include "pw/constructor.hpp"
#include "pw/hollow.hpp"
#include "pw/pc_poly.hpp"
#include "pw/poly_parse.hpp"
#include "pw/random.hpp"

namespace {

void BM_MatrixMultiply(benchmark::State& state) {
    pw::Rng rng(1);
    const auto s = static_cast<std::size_t>(state.range(0));
    const auto a = pw::random_matrix(s, rng);
    const auto b = pw::random_matrix(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMultiply)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HollowSimilarity(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto a = pw::random_trace_zero(d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(pw::hollow_similarity(a));
}
BENCHMARK(BM_HollowSimilarity)->Arg(2)->Arg(4)->Arg(8);

void BM_WitnessAlternating(benchmark::State& state) {
    const auto f = pw::parse_poly("X1*X2*X3 - X1*X3*X2 - X2*X1*X3 + X2*X3*X1 + X3*X1*X2 - X3*X2*X1");
    const auto a = pw::random_trace_zero(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(pw::witness_for_multilinear(f, a));
}
BENCHMARK(BM_WitnessAlternating)->Arg(2)->Arg(4);

void BM_WitnessRandomDegree4(benchmark::State& state) {
    const auto f = pw::random_multilinear(4, 0.5, 4);
    const auto a = pw::random_trace_zero(3, 5);
    for (auto _ : state) benchmark::DoNotOptimize(pw::witness_for_multilinear(f, a));
}
BENCHMARK(BM_WitnessRandomDegree4);

void BM_ExpandExtract(benchmark::State& state) {
    pw::Rng rng(6);
    const int n = static_cast<int>(state.range(0));
    const pw::OmegaSet omega({n + 1, n + 2});
    const auto f = pw::random_admissible(n, omega, 0.5, rng);
    for (auto _ : state) {
        const auto p = pw::expand_admissible(f);
        benchmark::DoNotOptimize(pw::extract_coefficients(p, n, omega));
    }
}
BENCHMARK(BM_ExpandExtract)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
