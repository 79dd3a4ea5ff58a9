#include <benchmark/benchmark.h>

#include "iw/distribution.hpp"
#include "iw/eisenstein.hpp"

using namespace iw;

static void BM_NewtonLog(benchmark::State& st) {
    long terms = st.range(0);
    auto L = padic_log(3, terms);
    for (auto _ : st) benchmark::DoNotOptimize(newton(L, (log_break(3, 3) + log_break(3, 4)) / 2, log_break(3, 0)));
}
BENCHMARK(BM_NewtonLog)->Arg(100)->Arg(300)->Arg(1000);

static void BM_Divide(benchmark::State& st) {
    long deg = st.range(0);
    QPoly g(deg + 1), f{Q(3), Q(1), Q(9)};
    for (long n = 0; n <= deg; ++n) g[n] = Q(n % 5 + 1) / Q(n % 3 + 1);
    auto G = TruncSeries::polynomial(3, g), F = TruncSeries::polynomial(3, f);
    for (auto _ : st) benchmark::DoNotOptimize(divide(G, F, Q(1, 2)));
}
BENCHMARK(BM_Divide)->Arg(10)->Arg(40);

static void BM_Omega(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(omega(3, 0, 2, default_u(3), st.range(0)));
}
BENCHMARK(BM_Omega)->DenseRange(1, 4);

static void BM_SystemRoundTrip(benchmark::State& st) {
    Window w(3, {0}, {1});
    GrowthClass h({Q(1)});
    QPoly c(40);
    for (long n = 0; n < 40; ++n) c[n] = Q(n % 7 - 3);
    auto f = TruncSeries::polynomial(3, c);
    for (auto _ : st) {
        auto s = system_from_series(f, h, w, {st.range(0)});
        benchmark::DoNotOptimize(reconstruct(s));
    }
}
BENCHMARK(BM_SystemRoundTrip)->Arg(1)->Arg(2);

static void BM_Moments(benchmark::State& st) {
    Window w(3, {0}, {1});
    GrowthClass h({Q(1)});
    QPoly c(30);
    for (long n = 0; n < 30; ++n) c[n] = Q(n % 4 + 1);
    auto s = system_from_series(TruncSeries::polynomial(3, c), h, w, {st.range(0)});
    for (auto _ : st) benchmark::DoNotOptimize(system_to_distribution(s));
}
BENCHMARK(BM_Moments)->Arg(1)->Arg(2);

static void BM_EisensteinF(benchmark::State& st) {
    auto psi = DirichletCharacter::all(7)[1];
    for (auto _ : st)
        benchmark::DoNotOptimize(eisen_F_qexp(psi.parity() < 0 ? 3 : 2, 1, DirichletCharacter::trivial(1), psi, st.range(0)));
}
BENCHMARK(BM_EisensteinF)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
