#include <benchmark/benchmark.h>

#include <memory>

#include "gstar/catalog.hpp"
#include "gstar/codim.hpp"
#include "gstar/reptheory.hpp"

using namespace gstar;

namespace {

GroupPtr group(int m) { return std::make_shared<FiniteAbelianGroup>(make_cyclic(m)); }

void BM_TotalCodim(benchmark::State& state, const char* spec, int m) {
    const auto a = build_from_spec(spec, group(m));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        CodimEngine e(a);
        benchmark::DoNotOptimize(e.total(n));
    }
}

void BM_Multiplicity(benchmark::State& state) {
    const auto a = build_from_spec("M11[g,g]", group(2));
    const auto n = static_cast<std::size_t>(state.range(0));
    Multipartition l(4);
    l[slot_of(VarKind::Y, 0)] = Partition{{n - 2}};
    l[slot_of(VarKind::Y, 1)] = Partition{{1}};
    l[slot_of(VarKind::Z, 1)] = Partition{{1}};
    for (auto _ : state) {
        CodimEngine e(a);
        benchmark::DoNotOptimize(multiplicity(e, l));
    }
}

void BM_Colength(benchmark::State& state) {
    const auto a = build_from_spec("FC2star", group(2));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        CodimEngine e(a);
        benchmark::DoNotOptimize(colength(e, n));
    }
}

void BM_TIdealComponent(benchmark::State& state) {
    const auto a = build_from_spec("Mrho[g]", group(2));
    const auto g = a.group();
    std::vector<Polynomial> gens;
    for (auto text : {"z1_1", "x1_g x2_g"})
        for (auto& p : parse_all(text, g)) gens.push_back(std::move(p));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        CodimEngine e(a);
        if (!ideal_generated_check(e, gens, n).equal) state.SkipWithError("generators fall short");
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_TotalCodim, a2star_z2, "A2star", 2)->DenseRange(3, 6);
BENCHMARK_CAPTURE(BM_TotalCodim, mrho_g_z3, "Mrho[g]", 3)->DenseRange(3, 5);
BENCHMARK_CAPTURE(BM_TotalCodim, m11_z2, "M11[g,g]", 2)->DenseRange(3, 5);
BENCHMARK(BM_Multiplicity)->DenseRange(3, 6);
BENCHMARK(BM_Colength)->DenseRange(3, 6);
BENCHMARK(BM_TIdealComponent)->DenseRange(2, 4);

BENCHMARK_MAIN();
