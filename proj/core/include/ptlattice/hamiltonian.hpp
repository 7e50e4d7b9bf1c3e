#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ptlattice/complex_matrix.hpp"
#include "ptlattice/lattice.hpp"

namespace ptl {

/// Row index of basis state |site, sigma>; site is 1-based, sigma = +1 or -1.
constexpr std::size_t basis_index(int site, int sigma) noexcept
{
    return 2 * static_cast<std::size_t>(site - 1) + (sigma > 0 ? 0 : 1);
}

/// Single-particle 2N x 2N Hamiltonian H = H_0 + V:
/// -T(k) hopping blocks between k and k+1 (and N -> 1 when periodic),
/// +i*gamma*Gamma on site m, -i*gamma*Gamma on site N+1-m.
ComplexMatrix assemble_hamiltonian(const LatticeSpec& spec);

/// True iff P conj(H) P == H within 1e-12 * max|H|, where P reverses sites
/// (k -> N+1-k) and acts trivially inside each site block of size dim/sites.
/// Throws Error{DimensionMismatch} unless dim == orbitals_per_site * sites.
bool check_pt_symmetry(const ComplexMatrix& hamiltonian, int sites, int orbitals_per_site = 2);

/// True iff every bond and the gain commute with tau_x (no tau_z content),
/// i.e. the model is invariant under sigma <-> -sigma.
bool is_exchange_symmetric(const LatticeSpec& spec);

/// Fixed single-site basis that diagonalises every bond and the gain matrix.
enum class SectorBasis {
    /// (|+> +- |->)/sqrt(2); sectors are named S (symmetric) and A (antisymmetric).
    Exchange,
    /// The pseudospin basis itself; sectors are sigma = +1 and sigma = -1.
    Pseudospin,
};

std::string_view to_string(SectorBasis basis) noexcept;

/// Pseudospin basis when every matrix is diagonal (x = 0 everywhere),
/// otherwise the exchange basis when every matrix has z = 0, otherwise none.
std::optional<SectorBasis> decomposition_basis(const LatticeSpec& spec);

} // namespace ptl
