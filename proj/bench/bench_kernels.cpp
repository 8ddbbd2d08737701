#include <benchmark/benchmark.h>

#include "padecheb/analysis.hpp"
#include "padecheb/piecewise1d.hpp"
#include "padecheb/piecewise2d.hpp"
#include "padecheb/registry.hpp"

using namespace padecheb;

namespace {

Execution mode(const benchmark::State &state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State &state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_BuildPipc(benchmark::State &state) {
    const auto partition = uniform_partition(Interval(-1, 1), static_cast<std::size_t>(state.range(1)));
    const PadeOrder1D order(20, 20);
    for (auto _ : state) {
        auto approx = build_pipc(functions::jump_root, partition, {&order, 1}, 200, {}, mode(state));
        benchmark::DoNotOptimize(approx);
    }
    label(state);
}

void BM_BuildPi2dpc(benchmark::State &state) {
    const auto cells = static_cast<std::size_t>(state.range(1));
    const Partition2D partition{uniform_partition(Interval(-1, 1), cells), uniform_partition(Interval(-1, 1), cells)};
    const PadeOrder2D order({8, 6}, {2, 3});
    for (auto _ : state) {
        auto approx = build_pi2dpc(functions::sign4xy, partition, order, {64, 64}, {}, mode(state));
        benchmark::DoNotOptimize(approx);
    }
    label(state);
}

void BM_ErrorNorms1D(benchmark::State &state) {
    const auto partition = uniform_partition(Interval(-1, 1), 64);
    const PadeOrder1D order(8, 4);
    const auto approx = build_pipc(functions::jump_root, partition, {&order, 1}, 64);
    const Evaluator1D eval = [&](double x) { return eval_pipc(approx, x); };
    const auto m = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        auto report = error_norms(functions::jump_root, eval, Interval(-1, 1), m, partition.nodes(), mode(state));
        benchmark::DoNotOptimize(report);
    }
    label(state);
}

} // namespace

BENCHMARK(BM_BuildPipc)->ArgsProduct({{0, 1}, {32, 512}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildPi2dpc)->ArgsProduct({{0, 1}, {4, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErrorNorms1D)->ArgsProduct({{0, 1}, {1 << 14, 1 << 18}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
