#include <numbers>

#include <benchmark/benchmark.h>

#include "thinfilm/integrator.hpp"
#include "thinfilm/nonlinearity.hpp"
#include "thinfilm/norms.hpp"
#include "thinfilm/rng.hpp"
#include "thinfilm/transform.hpp"

using namespace thinfilm;

namespace {

constexpr double pi = std::numbers::pi;

SpectralField random_field(std::size_t n) {
    SpectralField f(BasisSpec(BoundaryCondition::Periodic, 2.0 * pi, n));
    for (std::size_t j = 1; j <= n; ++j) {
        f.a[j - 1] = gaussian_draw(1, 0, static_cast<std::uint32_t>(2 * j), 0);
        f.b[j - 1] = gaussian_draw(1, 0, static_cast<std::uint32_t>(2 * j + 1), 0);
    }
    return f;
}

void bm_synthesize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SpectralField f = random_field(n);
    for (auto _ : state) benchmark::DoNotOptimize(to_physical(f, 4 * n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_synthesize)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void bm_nonlinearity(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SpectralField f = random_field(n);
    for (auto _ : state) benchmark::DoNotOptimize(nonlinearity(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_nonlinearity)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void bm_etd_step(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SimParams p;
    p.model.basis = BasisSpec(BoundaryCondition::Periodic, 2.0 * pi, n);
    p.model.nu = 1.0;
    p.model.noise = NoiseSpectrum::white(n);
    p.h = 1e-3;
    const LinearSpectrum spectrum = p.model.spectrum();
    TrajectoryState s = make_initial_state(SpectralField(p.model.basis), p.model, 1, 0);
    for (auto _ : state) etd_step(s, p, spectrum);
}
BENCHMARK(bm_etd_step)->RangeMultiplier(2)->Range(16, 256);

void bm_grid_norms(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SpectralField f = random_field(n);
    for (auto _ : state) benchmark::DoNotOptimize(norm(f, NormKind::C1));
}
BENCHMARK(bm_grid_norms)->RangeMultiplier(2)->Range(16, 256);

} // namespace

BENCHMARK_MAIN();
