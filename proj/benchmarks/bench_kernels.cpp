#include <benchmark/benchmark.h>

#include <vector>

#include "ace/ace.hpp"
#include "ace/random.hpp"

namespace {

ace::ScalarField noise_field(std::vector<std::size_t> shape, std::uint64_t seed) {
    const ace::Geometry g(shape);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ace::random::uniform(seed, i);
    return ace::ScalarField(g, std::move(v));
}

void BM_Curvature(benchmark::State& state, ace::CurvatureMode mode) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto u = mode == ace::CurvatureMode::Mean2D ? noise_field({n, n}, 1) : noise_field({n, n, n}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ace::curvature(u, mode));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.size()));
}
BENCHMARK_CAPTURE(BM_Curvature, mean2d, ace::CurvatureMode::Mean2D)->Arg(256)->Arg(512);
BENCHMARK_CAPTURE(BM_Curvature, mean3d, ace::CurvatureMode::Mean3D)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(BM_Curvature, fast3d, ace::CurvatureMode::Fast3D)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(BM_Curvature, lap3d, ace::CurvatureMode::Laplacian3D)->Arg(32)->Arg(64);

void BM_EnergyAndGradient(benchmark::State& state, ace::CurvatureMode mode) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bool planar = mode == ace::CurvatureMode::Mean2D;
    const auto u = planar ? noise_field({n, n}, 2) : noise_field({n, n, n}, 2);
    const auto r = planar ? noise_field({n, n}, 3) : noise_field({n, n, n}, 3);
    ace::EnergyParams p;
    p.mode = mode;
    const ace::SoftMask mask(u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ace::ace_energy(mask, r, p));
        benchmark::DoNotOptimize(ace::ace_gradient(mask, r, p));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.size()));
}
BENCHMARK_CAPTURE(BM_EnergyAndGradient, mean2d, ace::CurvatureMode::Mean2D)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_EnergyAndGradient, mean3d, ace::CurvatureMode::Mean3D)->Arg(32);
BENCHMARK_CAPTURE(BM_EnergyAndGradient, fast3d, ace::CurvatureMode::Fast3D)->Arg(32);

void BM_Hd95(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::array<std::size_t, 2> shape{n, n};
    const double c = static_cast<double>(n - 1) / 2.0;
    const auto a = ace::disk_case(shape, {c, c}, static_cast<double>(n) / 4.0, 1, 0, 0, 0).ground_truth;
    const auto b = ace::disk_case(shape, {c + 3, c - 2}, static_cast<double>(n) / 5.0, 1, 0, 0, 0).ground_truth;
    for (auto _ : state) benchmark::DoNotOptimize(ace::hd95(a, b));
}
BENCHMARK(BM_Hd95)->Arg(128)->Arg(512);

} // namespace

BENCHMARK_MAIN();
