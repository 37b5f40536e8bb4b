#include <benchmark/benchmark.h>

#include <array>

#include "preeq/bench.hpp"

namespace {

preeq::LedModel led() { return preeq::derive_led_model(preeq::LedParams{}, 50.0); }

preeq::LinkParams link(double h) {
    preeq::LinkConfig cfg;
    cfg.h = h;
    return preeq::linearize(cfg);
}

void cascade_three_stages(benchmark::State& state) {
    const preeq::LedModel m = led();
    const preeq::EqualizerModel eq =
        preeq::derive_equalizer_model(preeq::synthesize_from_poles(600e6, 600e6, m), 50.0);
    const preeq::LinkParams l = link(0.5);
    double f = 1e6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::link_response_cascade(f, l, m, eq));
        f = f < 1e10 ? f * 1.01 : 1e6;
    }
}
BENCHMARK(cascade_three_stages);

void numeric_bandwidth_two_pole(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::numeric_bandwidth(preeq::LinkPoles{44e6, 2.8e9}));
    }
}
BENCHMARK(numeric_bandwidth_two_pole);

void numeric_bandwidth_cascade(benchmark::State& state) {
    const preeq::LedModel m = led();
    const preeq::EqualizerModel eq =
        preeq::derive_equalizer_model(preeq::synthesize_from_poles(600e6, 600e6, m), 50.0);
    const preeq::LinkParams l = link(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::numeric_bandwidth(l, m, eq));
    }
}
BENCHMARK(numeric_bandwidth_cascade)->Unit(benchmark::kMicrosecond);

void optimal_design_by_regime(benchmark::State& state) {
    constexpr std::array<double, 3> hs{0.002, 0.01, 0.5};
    const preeq::LedModel m = led();
    const preeq::LinkParams l = link(hs[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::optimal_design(l, m));
    }
}
BENCHMARK(optimal_design_by_regime)->DenseRange(0, 2);

void grid_search(benchmark::State& state) {
    const preeq::LedModel m = led();
    const double a = preeq::alpha(link(0.5), m);
    const preeq::GridSpec grid{static_cast<int>(state.range(0)), 1e-6, 200};
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::grid_search_optimum(a, m, grid));
    }
}
BENCHMARK(grid_search)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void attenuation_sweep(benchmark::State& state) {
    const preeq::LedModel m = led();
    const preeq::LinkParams l = link(0.5);
    const std::vector<double> hs = preeq::log_spaced(1e-3, 1.0, 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(preeq::sweep_attenuation(l, m, hs));
    }
}
BENCHMARK(attenuation_sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
