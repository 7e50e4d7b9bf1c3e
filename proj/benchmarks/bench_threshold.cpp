#include <vector>

#include <benchmark/benchmark.h>

#include "ptlattice/threshold.hpp"

namespace {

void BM_FindThreshold(benchmark::State& state)
{
    const int sites = static_cast<int>(state.range(0));
    const auto profile = ptl::build_profile(ptl::ConstantProfile{1.0, 0.4}, sites, ptl::Boundary::Open);
    const ptl::LatticeSpec spec(profile, 1, ptl::SpinMatrix::tau_z(), 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ptl::find_threshold(spec, ptl::GainRay::tau_z()));
}

void BM_SectorThreshold(benchmark::State& state)
{
    const int sites = static_cast<int>(state.range(0));
    const auto profile = ptl::build_profile(ptl::ConstantProfile{1.0, 0.4}, sites, ptl::Boundary::Open);
    const ptl::LatticeSpec spec(profile, 1, ptl::SpinMatrix::identity(), 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ptl::sector_threshold_min(spec, ptl::GainRay::identity()));
}

void BM_PhaseDiagram(benchmark::State& state)
{
    const auto profile = ptl::build_profile(ptl::ConstantProfile{1.0, 0.4}, 20, ptl::Boundary::Open);
    const ptl::LatticeSpec spec(profile, 1, ptl::SpinMatrix::tau_z(), 0.0);
    const auto sites = ptl::admissible_impurity_sites(20);
    for (auto _ : state)
        benchmark::DoNotOptimize(ptl::phase_diagram(spec, sites, ptl::GainRay::tau_z(), {},
                                                    static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_FindThreshold)->Arg(20)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SectorThreshold)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhaseDiagram)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
