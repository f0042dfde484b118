#include <benchmark/benchmark.h>

#include <hcube/canon.hpp>
#include <hcube/certificate.hpp>
#include <hcube/clique.hpp>
#include <hcube/cover.hpp>
#include <hcube/word.hpp>

using namespace hcube;

namespace {

void BM_distance(benchmark::State& state) {
    word_t a = 0b101010101, b = 0b011001100;
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(a, b));
        a = (a * 7 + 1) & 0x1ff;
    }
}
BENCHMARK(BM_distance);

void BM_min_distance(benchmark::State& state) {
    Code c = certificate_c1();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c));
}
BENCHMARK(BM_min_distance);

void BM_build_compat_graph(benchmark::State& state) {
    const int n = int(state.range(0));
    auto evens = enumerate_even_bits(n);
    for (auto _ : state) benchmark::DoNotOptimize(build_compat_graph(evens, n, 4));
}
BENCHMARK(BM_build_compat_graph)->Arg(7)->Arg(9);

void BM_max_clique_even(benchmark::State& state) {
    const int n = int(state.range(0));
    CompatGraph g = build_compat_graph(enumerate_even_bits(n), n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).first);
}
BENCHMARK(BM_max_clique_even)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_canonical_form(benchmark::State& state) {
    Code c = certificate_c1();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c).code);
}
BENCHMARK(BM_canonical_form)->Unit(benchmark::kMillisecond);

void BM_automorphism_group(benchmark::State& state) {
    Code c = certificate_c0();
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(c).order());
}
BENCHMARK(BM_automorphism_group)->Unit(benchmark::kMillisecond);

void BM_exact_cover(benchmark::State& state) {
    // pentomino-ish synthetic instance: cover 24 atoms with 3-atom rows
    CoverInstance inst;
    inst.n_atoms = 24;
    int id = 0;
    for (int a = 0; a < 24; ++a)
        for (int b = a + 1; b < 24; b += 3)
            for (int c = b + 1; c < 24; c += 5)
                inst.rows.push_back({id++, {a, b, c}, 3});
    for (auto _ : state) benchmark::DoNotOptimize(count_exact_covers(inst));
}
BENCHMARK(BM_exact_cover)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
