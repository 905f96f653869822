#include <benchmark/benchmark.h>

#include "pachner/constructions.hpp"
#include "pachner/equalizer.hpp"
#include "pachner/fvector.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

static void BM_FVector(benchmark::State& state)
{
    const FacetComplex c = boundary_of_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(f_vector(c));
}
BENCHMARK(BM_FVector)->DenseRange(2, 6, 2);

static void BM_EnumerateBistellar(benchmark::State& state)
{
    const char* names[] = {"icosahedron", "torus7", "sphere3_min", "sphere4_min"};
    const FacetComplex c = fixture(names[state.range(0)]);
    state.SetLabel(names[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_bistellar(c));
}
BENCHMARK(BM_EnumerateBistellar)->DenseRange(0, 3);

static void BM_PlumpCell(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_plump_cell(n, 1));
}
BENCHMARK(BM_PlumpCell)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_MoldCell(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_mold_cell(n, 1));
}
BENCHMARK(BM_MoldCell)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_EqualizeClosed(benchmark::State& state)
{
    const FacetComplex a = fixture("sphere2_min"), b = fixture("icosahedron");
    for (auto _ : state)
        benchmark::DoNotOptimize(equalize_closed(a, b));
}
BENCHMARK(BM_EqualizeClosed)->Unit(benchmark::kMillisecond);

static void BM_EqualizeFull(benchmark::State& state)
{
    const FacetComplex a = fixture("disk_cone"), b = fixture("disk_hexagon");
    for (auto _ : state)
        benchmark::DoNotOptimize(equalize_full(a, b));
}
BENCHMARK(BM_EqualizeFull)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
