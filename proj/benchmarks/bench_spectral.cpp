#include <benchmark/benchmark.h>

#include "ptlattice/hamiltonian.hpp"
#include "ptlattice/spectral.hpp"

namespace {

ptl::LatticeSpec chain(int sites)
{
    const auto profile = ptl::build_profile(ptl::ConstantProfile{1.0, 0.4}, sites, ptl::Boundary::Open);
    return ptl::LatticeSpec(profile, 1, ptl::SpinMatrix::tau_z(), 0.3);
}

void BM_Eigenvalues(benchmark::State& state)
{
    const auto h = ptl::assemble_hamiltonian(chain(static_cast<int>(state.range(0)) / 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(ptl::eigenvalues(h));
    state.SetLabel("dim=" + std::to_string(h.dim()));
}

void BM_EigenDecomposition(benchmark::State& state)
{
    const auto h = ptl::assemble_hamiltonian(chain(static_cast<int>(state.range(0)) / 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(ptl::eigen_decomposition(h));
}

} // namespace

BENCHMARK(BM_Eigenvalues)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EigenDecomposition)->Arg(40)->Arg(80)->Unit(benchmark::kMicrosecond);
