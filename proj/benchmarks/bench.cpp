#include <benchmark/benchmark.h>

#include "grascurve/ffenum.hpp"
#include "grascurve/pluecker.hpp"
#include "grascurve/rng.hpp"
#include "grascurve/section.hpp"

namespace gc = grascurve;

static void BM_Rref(benchmark::State& state) {
    gc::Rng rng(1);
    gc::Mat<gc::Rat> m(10, 10, gc::Rat(0));
    for (int i = 0; i < 10; ++i) m.set_row(i, rng.rat_vector(10));
    for (auto _ : state) {
        gc::Mat<gc::Rat> copy = m;
        gc::rref_in_place(copy, nullptr, nullptr);
        benchmark::DoNotOptimize(copy);
    }
}
BENCHMARK(BM_Rref);

static void BM_PlueckerEmbed(benchmark::State& state) {
    gc::Rng rng(2);
    auto w = gc::Subspace<gc::Rat>::span_vectors(
        {rng.rat_vector_nonzero(5), rng.rat_vector_nonzero(5)}, 5, gc::Rat(0));
    for (auto _ : state) {
        auto p = gc::pluecker_embed(w);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PlueckerEmbed);

static void BM_EnumLinesGF3(benchmark::State& state) {
    gc::EnumSpec spec;
    spec.p = 3;
    spec.object = gc::EnumObject::Lines;
    spec.section = gc::section_preset("Y5");
    for (auto _ : state) {
        auto r = gc::enumerate_count(spec);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_EnumLinesGF3);

BENCHMARK_MAIN();
