#pragma once

#include <span>
#include <vector>

#include "ptlattice/complex_matrix.hpp"
#include "ptlattice/hamiltonian.hpp"
#include "ptlattice/lattice.hpp"
#include "ptlattice/spectral.hpp"

namespace ptl {

/// Spinless lattice: scalar bonds t_k, +i*gamma at m and -i*gamma at N+1-m.
/// The impurity strength is signed so that sigma = -1 sectors (gain -gamma at
/// m) share the type.
class ScalarLatticeSpec {
public:
    ScalarLatticeSpec(int sites, Boundary boundary, std::vector<double> bonds, int impurity_site,
                      double impurity_strength);

    int sites() const noexcept { return sites_; }
    Boundary boundary() const noexcept { return boundary_; }
    std::span<const double> bonds() const noexcept { return bonds_; }
    int impurity_site() const noexcept { return impurity_site_; }
    int mirror_site() const noexcept { return sites_ + 1 - impurity_site_; }
    double impurity_strength() const noexcept { return impurity_strength_; }

    double reference_scale() const noexcept;

    ScalarLatticeSpec with_impurity_strength(double impurity_strength) const;

private:
    int sites_;
    Boundary boundary_;
    std::vector<double> bonds_;
    int impurity_site_;
    double impurity_strength_;
};

struct SectorPair {
    SectorBasis basis;
    /// S in the exchange basis, sigma = +1 in the pseudospin basis.
    ScalarLatticeSpec first;
    /// A in the exchange basis, sigma = -1 in the pseudospin basis.
    ScalarLatticeSpec second;
};

/// Exact reduction H = H_first (+) H_second. In the exchange basis the bonds
/// are t_s +- t_d and the impurities gamma*(g_s +- g_d); in the pseudospin
/// basis they are s +- z and gamma*(g_s +- g_z).
/// Throws Error{NotDecomposable} when tau_x and tau_z content are mixed.
SectorPair decompose(const LatticeSpec& spec);

/// Inverse map for exchange-basis sectors: t_s = (t^S + t^A)/2,
/// t_d = (t^S - t^A)/2, gain (g^S + g^A)/2, (g^S - g^A)/2 with unit scale.
LatticeSpec recompose(const SectorPair& sectors);

/// N x N matrix: -t_k on (k, k+1) and (k+1, k), +i*gamma at (m, m), -i*gamma at (m-bar, m-bar).
ComplexMatrix assemble_scalar_hamiltonian(const ScalarLatticeSpec& spec);

struct DirectSumReport {
    SectorBasis basis;
    std::vector<Complex> full_spectrum;
    std::vector<Complex> first_spectrum;
    std::vector<Complex> second_spectrum;
    double max_distance = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares the 2N spectrum with the multiset union of the two sector spectra.
DirectSumReport verify_direct_sum(const LatticeSpec& spec, double tolerance, const EigenOptions& options = {});

} // namespace ptl
