#pragma once

// Test-only reference routines. Nothing here calls the library eigensolver,
// threshold search or sector decomposition.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ptlattice/complex_matrix.hpp"
#include "ptlattice/lattice.hpp"

namespace ptl::testing {

/// Eigenvalues from Eigen's complex Schur solver.
inline std::vector<Complex> reference_eigenvalues(const ComplexMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return out;
}

inline double reference_max_abs_imag(const ComplexMatrix& m)
{
    double out = 0.0;
    for (const auto& e : reference_eigenvalues(m))
        out = std::max(out, std::abs(e.imag()));
    return out;
}

/// Bisection on Eigen eigenvalues with a plain fixed bracket [0, hi].
template <class Family>
double reference_threshold(Family&& family, double hi, double tolerance, double reality = 1e-8)
{
    double lo = 0.0;
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (reference_max_abs_imag(family(mid)) > reality)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// Symmetric pairing check by brute force: every element has a partner
/// (without reuse) within tol.
inline bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol)
{
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (!used[j] && std::abs(x - b[j]) <= tol) {
                used[j] = true;
                found = true;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

/// Dense Hamiltonian of a spinless chain written out directly from its
/// definition, independent of the library assembly code.
inline ComplexMatrix direct_scalar_chain(int n, const std::vector<double>& bonds, bool periodic, int m, double gamma)
{
    ComplexMatrix h(static_cast<std::size_t>(n));
    for (int k = 0; k + 1 < n; ++k) {
        h(k, k + 1) = -bonds[k];
        h(k + 1, k) = -bonds[k];
    }
    if (periodic) {
        h(n - 1, 0) += -bonds[n - 1];
        h(0, n - 1) += -bonds[n - 1];
    }
    h(m - 1, m - 1) += Complex(0.0, gamma);
    h(n - m, n - m) += Complex(0.0, -gamma);
    return h;
}

/// Random parity-symmetric bond list with 0 <= x <= s and z = 0.
inline std::vector<SpinMatrix> random_symmetric_bonds(std::mt19937_64& rng, int n, Boundary boundary,
                                                      double max_mixing = 1.0)
{
    std::uniform_real_distribution<double> amp(0.2, 1.5);
    std::uniform_real_distribution<double> frac(0.0, max_mixing);
    const int count = bond_count(n, boundary);
    std::vector<SpinMatrix> bonds(static_cast<std::size_t>(count));
    for (int k = 1; k <= n / 2; ++k) {
        const double s = amp(rng);
        const SpinMatrix b{s, frac(rng) * s, 0.0};
        bonds[k - 1] = b;
        if (n - k - 1 >= 0)
            bonds[n - k - 1] = b;
    }
    if (boundary == Boundary::Periodic) {
        const double s = amp(rng);
        bonds[n - 1] = {s, frac(rng) * s, 0.0};
    }
    return bonds;
}

} // namespace ptl::testing
