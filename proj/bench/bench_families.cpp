// Serial vs OpenMP family kernels on a table of many random families.

#include <benchmark/benchmark.h>

#include <vector>

#include "breakloops/pipeline.hpp"
#include "oracle.hpp"

using namespace breakloops;

namespace {

Pedigree many_families(std::size_t families) {
    std::vector<Individual> rows;
    PersonId offset = 0;
    for (std::size_t f = 0; f < families; ++f) {
        oracle::GeneratorParams params;
        params.min_individuals = 21;
        params.max_individuals = 47;
        params.loops = 1 + f % 3;
        params.multiple_matings = f % 2 == 0;
        params.variant_count = 3;
        params.tested_fraction = 0.3;
        params.seed = f + 1;
        const auto p = oracle::random_pedigree(params);
        for (auto ind : p.individuals()) {
            ind.id += offset;
            if (ind.mother_id) *ind.mother_id += offset;
            if (ind.father_id) *ind.father_id += offset;
            rows.push_back(ind);
        }
        offset += p.max_id();
    }
    return Pedigree(rows, {"V1", "V2", "V3"});
}

const PreparedInput& input_for(std::size_t families) {
    static std::vector<std::pair<std::size_t, PreparedInput>> cache;
    for (const auto& [n, in] : cache) {
        if (n == families) return in;
    }
    cache.emplace_back(families, prepare_families(many_families(families)));
    return cache.back().second;
}

void BM_serial(benchmark::State& state) {
    const auto& input = input_for(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(break_families_serial(input, {}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_parallel(benchmark::State& state) {
    const auto& input = input_for(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(break_families_parallel(input, {}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(16)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->Arg(16)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
