#include <benchmark/benchmark.h>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/homology.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

static void BM_BuildPolygonComplex(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AssocComplex a = assoc_build(n);
        benchmark::DoNotOptimize(a.complex.facets().size());
    }
}
BENCHMARK(BM_BuildPolygonComplex)->Arg(6)->Arg(7)->Arg(8);

static void BM_ReducedBetti(benchmark::State& state) {
    SimplicialComplex k = deltahedron(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh copy defeats the per-complex cache
        SimplicialComplex c = SimplicialComplex::from_facet_masks(k.labels(), k.facets());
        benchmark::DoNotOptimize(reduced_betti(c));
    }
}
BENCHMARK(BM_ReducedBetti)->Arg(8)->Arg(10)->Arg(11);

static void BM_CanonicalForm(benchmark::State& state) {
    SimplicialComplex k = assoc_build(static_cast<int>(state.range(0))).complex;
    for (auto _ : state) {
        SimplicialComplex c = SimplicialComplex::from_facet_masks(k.labels(), k.facets());
        benchmark::DoNotOptimize(canonical_form(c));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7);

static void BM_T2Certificate(benchmark::State& state) {
    SimplicialComplex k = assoc_build(static_cast<int>(state.range(0))).complex;
    for (auto _ : state) {
        SimplicialComplex c = SimplicialComplex::from_facet_masks(k.labels(), k.facets());
        benchmark::DoNotOptimize(t2_certificate(c).all_zero);
    }
}
BENCHMARK(BM_T2Certificate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_NonEdgePiece(benchmark::State& state) {
    SimplicialComplex k = assoc_build(7).complex;
    Mask b = k.minimal_nonfaces().front();
    for (auto _ : state) benchmark::DoNotOptimize(relative_pair_cohomology(k, b, 2));
}
BENCHMARK(BM_NonEdgePiece)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
