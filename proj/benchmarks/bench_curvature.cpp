#include "liegauss/catalog.hpp"
#include "liegauss/classification.hpp"
#include "liegauss/gaussmap.hpp"
#include "liegauss/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace liegauss;

static void BM_riemann_tensor_unimodular(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::unimodular(3.0, 2.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(riemann_tensor(spec));
}
BENCHMARK(BM_riemann_tensor_unimodular);

static void BM_riemann_tensor_nonunimodular(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::nonunimodular(0.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(riemann_tensor(spec));
}
BENCHMARK(BM_riemann_tensor_nonunimodular);

static void BM_fd_riemann_frame(benchmark::State& state) {
    const CoordModel model = e11_model(1.3, 0.8);
    const CoordPoint p{0.2, -0.4, 0.7};
    const FDConfig cfg{1e-5, state.range(0) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(fd_riemann_frame(model, p, cfg));
}
BENCHMARK(BM_fd_riemann_frame)->Arg(0)->Arg(1);

static void BM_surface_jet(benchmark::State& state) {
    const ImmersedPatch patch = catalog_patch("thm53-ii", 1.0, 1.0);
    double u = 0.0;
    for (auto _ : state) {
        u += 1e-3;
        benchmark::DoNotOptimize(surface_jet(patch, u, -0.5));
    }
}
BENCHMARK(BM_surface_jet);

static void BM_gauss_diagnostics(benchmark::State& state) {
    const ImmersedPatch patch = catalog_patch("thm53-i", 1.2, 0.9);
    const CurvatureData R = riemann_tensor(patch.model().group_spec());
    const SurfaceJet jet = surface_jet(patch, 0.4, -0.7);
    for (auto _ : state) benchmark::DoNotOptimize(diagnose(R, jet));
}
BENCHMARK(BM_gauss_diagnostics);

static void BM_verify_theorem_53(benchmark::State& state) {
    TheoremParams params;
    params.lambda1 = params.lambda2 = 1.0;
    params.grid = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem("5.3", params));
}
BENCHMARK(BM_verify_theorem_53)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
