// Microbenchmarks for the hot paths: row reduction, the two distance
// evaluations, MRD enumeration, and bound arithmetic.

#include <benchmark/benchmark.h>

#include <vector>

#include "cdc/bounds.hpp"
#include "cdc/constructions.hpp"
#include "cdc/gabidulin.hpp"
#include "cdc/prng.hpp"
#include "cdc/subspace.hpp"

namespace {

cdc::Mat random_mat(const cdc::GF& gf, int rows, int cols, cdc::Mcg64& rng) {
    cdc::Mat m(gf, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = (uint32_t)rng.below(gf.q());
    return m;
}

void BM_rref(benchmark::State& state) {
    cdc::GF gf((uint32_t)state.range(0));
    cdc::Mcg64 rng(7);
    std::vector<cdc::Mat> mats;
    for (int i = 0; i < 64; ++i) mats.push_back(random_mat(gf, 8, 16, rng));
    size_t i = 0;
    for (auto _ : state) {
        cdc::Mat m = mats[i++ & 63];
        benchmark::DoNotOptimize(m.rref_in_place());
    }
}
BENCHMARK(BM_rref)->Arg(2)->Arg(3)->Arg(9);

void BM_subspace_distance(benchmark::State& state) {
    cdc::GF gf(2);
    cdc::Mcg64 rng(11);
    std::vector<cdc::Subspace> subs;
    while (subs.size() < 64) {
        cdc::Mat m = random_mat(gf, 6, 14, rng);
        cdc::Mat r = m;
        if (r.rref_in_place() == 6) subs.push_back(cdc::Subspace::from_span(m));
    }
    size_t i = 0;
    for (auto _ : state) {
        const auto& u = subs[i & 63];
        const auto& v = subs[(i + 17) & 63];
        ++i;
        benchmark::DoNotOptimize(cdc::subspace_distance(u, v));
    }
}
BENCHMARK(BM_subspace_distance);

void BM_distance_at_least(benchmark::State& state) {
    cdc::SubspaceCode code = cdc::lift_mrd(2, 8, 4, 2);
    cdc::Mcg64 rng(13);
    size_t n = code.words.size();
    for (auto _ : state) {
        uint64_t i = rng.below(n), j = rng.below(n - 1);
        if (j >= i) ++j;
        benchmark::DoNotOptimize(
            cdc::subspace_distance_at_least(code.words[i], code.words[j], 4));
    }
}
BENCHMARK(BM_distance_at_least);

void BM_mrd_enumeration(benchmark::State& state) {
    cdc::MrdCode mrd(2, 4, 4, 2);
    uint64_t total = mrd.size_u64();
    for (auto _ : state) {
        for (uint64_t idx = 0; idx < total; idx += 37)
            benchmark::DoNotOptimize(mrd.word(idx));
    }
}
BENCHMARK(BM_mrd_enumeration);

void BM_bound_new3(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cdc::bound_new3(9, 19, 7, 3));
}
BENCHMARK(BM_bound_new3);

void BM_bound_cdc45(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cdc::bound_cdc45(9, 14));
}
BENCHMARK(BM_bound_cdc45);

}  // namespace

BENCHMARK_MAIN();
