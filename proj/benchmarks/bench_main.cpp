// Microbenchmarks for the hot paths: sequence terms, bicomplex products,
// a full identity verification cell, and float EGF evaluation.

#include <benchmark/benchmark.h>

#include "qfbq/identities.hpp"
#include "qfbq/sequences.hpp"

namespace {

using namespace qfbq;

QParams rational_params() { return QParams(ExactScalar(Rational(3, 2)), ExactScalar(2)); }

void BM_QFibTerm(benchmark::State& state) {
    QParams p = rational_params();
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfib(n, p));
    }
}
BENCHMARK(BM_QFibTerm)->Arg(8)->Arg(32)->Arg(128);

void BM_QFibTermClassical(benchmark::State& state) {
    QParams p = classical_params();
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfib(n, p));
    }
}
BENCHMARK(BM_QFibTermClassical)->Arg(8)->Arg(32)->Arg(128);

void BM_BicomplexProduct(benchmark::State& state) {
    QParams p = rational_params();
    Bicomplex x = qfib(12, p);
    Bicomplex y = qlucas(12, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_BicomplexProduct);

void BM_CassiniCell(benchmark::State& state) {
    // One grid cell: production LHS, closed-form RHS, definitional oracle,
    // and the equality checks.
    std::vector<QParams> params{rational_params()};
    for (auto _ : state) {
        auto reports = verify_grid(params, IndexSpan{6, 6}, IndexSpan{6, 6});
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_CassiniCell);

void BM_EgfClosed256(benchmark::State& state) {
    QParams p(ExactScalar(1), ExactScalar(Rational(1, 2)));
    ExactScalar t(Rational(1, 10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(egf_closed(t, p, 256));
    }
}
BENCHMARK(BM_EgfClosed256);

void BM_EgfPartialExact(benchmark::State& state) {
    QParams p(ExactScalar(1), ExactScalar(Rational(1, 2)));
    ExactScalar t(Rational(1, 10));
    const long N = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(egf_partial(N, t, p));
    }
}
BENCHMARK(BM_EgfPartialExact)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
