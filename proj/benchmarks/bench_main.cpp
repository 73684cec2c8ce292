#include "phicert/criteria.hpp"
#include "phicert/gfpoly.hpp"
#include "phicert/oracle.hpp"
#include "phicert/polygon.hpp"

#include <benchmark/benchmark.h>

using namespace phicert;

namespace {

const IntPoly kQuartic{-1, -1, 0, 0, 1};

void BM_PhiExpand(benchmark::State& state)
{
    const IntPoly f = factorial_polynomial(kQuartic, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_expand(f, kQuartic));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PhiExpand)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_FactorialPolygon(benchmark::State& state)
{
    const PhiExpansion e = phi_expand(factorial_polynomial(IntPoly::x(), state.range(0)), IntPoly::x());
    const Prime p(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_polygon(polygon_points(e, p)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FactorialPolygon)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Rabin(benchmark::State& state)
{
    // x^d - x - 1 over F_101
    std::vector<std::uint64_t> c(static_cast<std::size_t>(state.range(0)) + 1, 0);
    c[0] = 100;
    c[1] = 100;
    c.back() = 1;
    const GfPoly f(Prime(101), c);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_irreducible_mod_p(f));
}
BENCHMARK(BM_Rabin)->DenseRange(4, 32, 4);

void BM_KroneckerCounterexample(benchmark::State& state)
{
    const IntPoly g{4, 11, 17, 12, 6};
    for (auto _ : state)
        benchmark::DoNotOptimize(kronecker_factor(g));
}
BENCHMARK(BM_KroneckerCounterexample);

void BM_KroneckerDegree8(benchmark::State& state)
{
    const IntPoly f = IntPoly{3, 1, 0, 0, 1} * IntPoly{-2, 0, 5, 0, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerDegree8);

void BM_SieveDegree24(benchmark::State& state)
{
    const IntPoly f = coleman_polynomial(kQuartic, 6, std::vector<IntPoly>(6, IntPoly{1}));
    for (auto _ : state)
        benchmark::DoNotOptimize(degree_set_sieve(f));
}
BENCHMARK(BM_SieveDegree24);

void BM_CheckSchur(benchmark::State& state)
{
    const auto n = state.range(0);
    SchurInput in{kQuartic, n, std::vector<IntPoly>(static_cast<std::size_t>(n), IntPoly{1}), 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_schur(in));
}
BENCHMARK(BM_CheckSchur)->Arg(4)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CheckColeman(benchmark::State& state)
{
    const auto n = state.range(0);
    const std::vector<IntPoly> ones(static_cast<std::size_t>(n), IntPoly{1});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_coleman(kQuartic, n, ones));
}
BENCHMARK(BM_CheckColeman)->Arg(6)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
