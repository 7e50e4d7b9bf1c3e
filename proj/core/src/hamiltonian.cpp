#include "ptlattice/hamiltonian.hpp"

#include <string>

#include "ptlattice/errors.hpp"

namespace ptl {

namespace {

constexpr double kPtSymmetryTolerance = 1e-12;

void add_block(ComplexMatrix& h, int row_site, int col_site, const SpinMatrix& block, Complex factor)
{
    const auto e = block.entries();
    const std::size_t r = basis_index(row_site, +1);
    const std::size_t c = basis_index(col_site, +1);
    h(r, c) += factor * e[0];
    h(r, c + 1) += factor * e[1];
    h(r + 1, c) += factor * e[2];
    h(r + 1, c + 1) += factor * e[3];
}

} // namespace

std::string_view to_string(SectorBasis basis) noexcept
{
    return basis == SectorBasis::Exchange ? "exchange" : "pseudospin";
}

ComplexMatrix assemble_hamiltonian(const LatticeSpec& spec)
{
    const int n = spec.sites();
    ComplexMatrix h(2 * static_cast<std::size_t>(n));

    const auto bonds = spec.profile().bonds();
    for (int k = 1; k <= static_cast<int>(bonds.size()); ++k) {
        const int next = k == n ? 1 : k + 1;
        const auto& t = bonds[static_cast<std::size_t>(k - 1)];
        add_block(h, k, next, t, -1.0);
        add_block(h, next, k, t, -1.0);
    }

    const SpinMatrix gain = spec.effective_gain();
    add_block(h, spec.impurity_site(), spec.impurity_site(), gain, Complex{0.0, 1.0});
    add_block(h, spec.mirror_site(), spec.mirror_site(), gain, Complex{0.0, -1.0});
    return h;
}

bool check_pt_symmetry(const ComplexMatrix& hamiltonian, int sites, int orbitals_per_site)
{
    if (sites < 1 || orbitals_per_site < 1 ||
        hamiltonian.dim() != static_cast<std::size_t>(sites) * static_cast<std::size_t>(orbitals_per_site)) {
        throw Error(ErrorKind::DimensionMismatch, "matrix of dimension " + std::to_string(hamiltonian.dim()) +
                                                      " is not " + std::to_string(orbitals_per_site) + " x N=" +
                                                      std::to_string(sites));
    }
    const auto b = static_cast<std::size_t>(orbitals_per_site);
    const std::size_t d = hamiltonian.dim();
    const auto parity = [&](std::size_t i) {
        const std::size_t site = i / b;
        return (static_cast<std::size_t>(sites) - 1 - site) * b + i % b;
    };
    const double tol = kPtSymmetryTolerance * hamiltonian.max_abs();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(std::conj(hamiltonian(parity(i), parity(j))) - hamiltonian(i, j)) > tol)
                return false;
        }
    return true;
}

bool is_exchange_symmetric(const LatticeSpec& spec)
{
    for (const auto& bond : spec.profile().bonds()) {
        if (bond.z != 0.0)
            return false;
    }
    return spec.gain().z == 0.0;
}

std::optional<SectorBasis> decomposition_basis(const LatticeSpec& spec)
{
    bool diagonal = spec.gain().x == 0.0;
    for (const auto& bond : spec.profile().bonds())
        diagonal = diagonal && bond.x == 0.0;
    if (diagonal)
        return SectorBasis::Pseudospin;
    if (is_exchange_symmetric(spec))
        return SectorBasis::Exchange;
    return std::nullopt;
}

} // namespace ptl
