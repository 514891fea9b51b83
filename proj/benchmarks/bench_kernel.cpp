#include <benchmark/benchmark.h>

#include "alphacalc/alpha_exp.hpp"
#include "alphacalc/gamma.hpp"
#include "alphacalc/madelung.hpp"
#include "alphacalc/random_series.hpp"

using namespace alphacalc;

namespace {

PuiseuxSeries random_series(int terms, std::uint64_t seed) {
    SeriesGen gen(seed);
    return gen.series(terms);
}

void BM_series_mul(benchmark::State& state) {
    PuiseuxSeries f = random_series(static_cast<int>(state.range(0)), 1);
    PuiseuxSeries g = random_series(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_series_mul)->Arg(4)->Arg(8);

void BM_alpha_deriv(benchmark::State& state) {
    PuiseuxSeries f = random_series(8, 3);
    AlphaOrder a(1, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_deriv(f, a));
}
BENCHMARK(BM_alpha_deriv);

void BM_reciprocal(benchmark::State& state) {
    PuiseuxSeries f = random_series(6, 4);
    Rational T(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reciprocal(f, T));
}
BENCHMARK(BM_reciprocal)->Arg(8)->Arg(16);

void BM_leibnitz_residual(benchmark::State& state) {
    PuiseuxSeries f = random_series(8, 5);
    PuiseuxSeries g = random_series(8, 6);
    AlphaOrder a(2, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(leibnitz_residual(f, g, a));
}
BENCHMARK(BM_leibnitz_residual);

void BM_gamma_eval(benchmark::State& state) {
    double x = 3.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_eval(x));
    }
}
BENCHMARK(BM_gamma_eval);

void BM_quantum_potential(benchmark::State& state) {
    SeriesGen gen(7);
    PuiseuxSeries R = add(gen.series(5),
                          PuiseuxSeries::constant(Coefficient::one(Domain::exact)));
    AlphaOrder a(1, 2);
    Rational D(1, 2), hbar(1), T(16);
    for (auto _ : state)
        benchmark::DoNotOptimize(quantum_potential(R, a, D, hbar, T));
}
BENCHMARK(BM_quantum_potential);

void BM_derivation_audit(benchmark::State& state) {
    SeriesGen gen(8);
    PuiseuxSeries R = gen.series(6), S = gen.series(6);
    PuiseuxSeries S_t = gen.series(4), R_t = gen.series(4);
    AlphaOrder a(1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(derivation_audit(R, S, S_t, R_t, a, Rational(1)));
}
BENCHMARK(BM_derivation_audit);

void BM_ode_residual(benchmark::State& state) {
    AlphaOrder a(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(ode_residual(a, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ode_residual)->Arg(10)->Arg(25);

} // namespace

BENCHMARK_MAIN();
