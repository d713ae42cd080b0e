// Microbenchmarks for the hot kernels: banded Chebyshev steps, the two
// moment recurrences, rule synthesis, and the full entropy drivers.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "opq/banded.hpp"
#include "opq/entropy.hpp"
#include "opq/gegenbauer.hpp"
#include "opq/moments.hpp"
#include "opq/oracle.hpp"
#include "opq/recurrence.hpp"
#include "opq/specfun.hpp"

namespace {

opq::RecurrenceCoefficients make_coeffs(double lambda, std::size_t m) {
    return opq::gegenbauer_coefficients(opq::GegenbauerParams(lambda), m);
}

void BM_ChebStepTridiagonal(benchmark::State& state) {
    const std::size_t r = state.range(0);
    std::vector<double> d(r, 0.0), e(r - 1, 0.5);
    std::vector<double> cur(r, 1.0), prev(r, 0.5);
    for (auto _ : state) {
        opq::cheb_step_tridiagonal(d.data(), e.data(), r, cur.data(),
                                   prev.data());
        benchmark::DoNotOptimize(prev.data());
        std::swap(cur, prev);
    }
    state.SetItemsProcessed(state.iterations() * r);
}
BENCHMARK(BM_ChebStepTridiagonal)->Arg(256)->Arg(2048)->Arg(16384);

void BM_ChebStepEven(benchmark::State& state) {
    const std::size_t r = state.range(0);
    const auto coeffs = make_coeffs(1.5, r);
    auto B = opq::even_squared_bands(
        std::vector<double>(coeffs.a_all().begin(), coeffs.a_all().end() - 1),
        r);
    std::vector<double> cur(r, 1.0), prev(r, 0.5);
    for (auto _ : state) {
        opq::cheb_step_even(B, cur.data(), prev.data());
        benchmark::DoNotOptimize(prev.data());
        std::swap(cur, prev);
    }
    state.SetItemsProcessed(state.iterations() * r);
}
BENCHMARK(BM_ChebStepEven)->Arg(256)->Arg(2048)->Arg(16384);

void BM_EvenTraceMoments(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto coeffs = make_coeffs(1.5, n);
    const auto J = opq::minor(coeffs, n);
    const std::size_t K = 2 * n;
    for (auto _ : state) {
        auto c = opq::even_trace_moments(J, K);
        benchmark::DoNotOptimize(c.values.data());
    }
}
BENCHMARK(BM_EvenTraceMoments)->Arg(50)->Arg(200)->Arg(500);

void BM_EvenColumnMoments(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const std::size_t K = 2 * n;
    const auto coeffs = make_coeffs(1.5, n + 1 + K);
    for (auto _ : state) {
        auto m = opq::even_column_moments(coeffs, n, K);
        benchmark::DoNotOptimize(m.values.data());
    }
}
BENCHMARK(BM_EvenColumnMoments)->Arg(50)->Arg(200)->Arg(500);

void BM_EntropyTerminating(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const opq::GegenbauerParams p(2.0);
    for (auto _ : state) {
        auto r = opq::entropy_gegenbauer(p, n, 1e-12);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_EntropyTerminating)->Arg(50)->Arg(200)->Arg(500);

void BM_EntropyBounded(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const opq::GegenbauerParams p(1.5);
    for (auto _ : state) {
        auto r = opq::entropy_gegenbauer(p, n, 1e-6);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_EntropyBounded)->Arg(10)->Arg(50)->Arg(100);

void BM_GaussRule(benchmark::State& state) {
    const std::size_t r = state.range(0);
    const auto coeffs = make_coeffs(0.5, r);
    for (auto _ : state) {
        auto rule = opq::gauss_rule(coeffs, r);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(BM_GaussRule)->Arg(100)->Arg(500)->Arg(2000);

void BM_LnGamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(opq::ln_gamma(x));
        x += 0.1;
        if (x > 500.0) x = 0.1;
    }
}
BENCHMARK(BM_LnGamma);

}  // namespace

BENCHMARK_MAIN();
