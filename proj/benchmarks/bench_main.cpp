#include <benchmark/benchmark.h>

#include "icc/icc.hpp"

namespace {

void bm_structures_class_a(benchmark::State& state) {
    const auto g = icc::gen_class_a(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(icc::find_ic_structures(g));
}
BENCHMARK(bm_structures_class_a)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_icc_random(benchmark::State& state) {
    const auto g = icc::gen_random(static_cast<int>(state.range(0)), 1, 3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(icc::icc_length(g));
}
BENCHMARK(bm_icc_random)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void bm_partial_clique(benchmark::State& state) {
    const auto g = icc::gen_random(static_cast<int>(state.range(0)), 1, 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(icc::partial_clique_number(g));
}
BENCHMARK(bm_partial_clique)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void bm_mais(benchmark::State& state) {
    const auto g = icc::gen_random(static_cast<int>(state.range(0)), 1, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(icc::mais(g));
}
BENCHMARK(bm_mais)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void bm_fractional(benchmark::State& state) {
    const auto g = icc::gen_random(static_cast<int>(state.range(0)), 1, 2, 9);
    for (auto _ : state) benchmark::DoNotOptimize(icc::fractional_icc(g));
}
BENCHMARK(bm_fractional)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_icc_round_trip(benchmark::State& state) {
    const auto g = icc::gen_class_a(6);
    const auto code = icc::partition_code(g, icc::icc_length(g).partition, "icc");
    const auto msgs = icc::MessageBlock::random(g.n(), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        const auto payload = icc::evaluate(code, msgs);
        for (icc::Vertex v = 1; v <= g.n(); ++v)
            benchmark::DoNotOptimize(icc::linear_decode(g, code, payload, v, icc::side_info_for(g, v, msgs)));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0) * g.n());
}
BENCHMARK(bm_icc_round_trip)->Arg(64)->Arg(4096);

}  // namespace
BENCHMARK_MAIN();
