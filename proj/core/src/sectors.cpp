#include "ptlattice/sectors.hpp"

#include <cmath>
#include <string>

#include "ptlattice/errors.hpp"

namespace ptl {

ScalarLatticeSpec::ScalarLatticeSpec(int sites, Boundary boundary, std::vector<double> bonds, int impurity_site,
                                     double impurity_strength)
    : sites_(sites), boundary_(boundary), bonds_(std::move(bonds)), impurity_site_(impurity_site),
      impurity_strength_(impurity_strength)
{
    if (sites_ < 2 || (boundary_ == Boundary::Periodic && sites_ < 3))
        throw Error(ErrorKind::InvalidArgument, "scalar lattice too small: N=" + std::to_string(sites_));
    if (static_cast<int>(bonds_.size()) != bond_count(sites_, boundary_))
        throw Error(ErrorKind::BadLength, "scalar lattice has " + std::to_string(bonds_.size()) + " bonds");
    for (int k = 1; k < sites_; ++k) {
        if (bonds_[static_cast<std::size_t>(k - 1)] != bonds_[static_cast<std::size_t>(sites_ - k - 1)])
            throw Error(ErrorKind::NonParitySymmetric, "scalar bond " + std::to_string(k) + " breaks parity");
    }
    for (double t : bonds_) {
        if (!std::isfinite(t))
            throw Error(ErrorKind::InvalidArgument, "scalar bond is not finite");
    }
    if (!std::isfinite(impurity_strength_))
        throw Error(ErrorKind::InvalidArgument, "impurity strength is not finite");
    validate_impurity_site(sites_, impurity_site_);
}

double ScalarLatticeSpec::reference_scale() const noexcept
{
    double scale = 0.0;
    for (double t : bonds_)
        scale = std::max(scale, std::abs(t));
    return scale;
}

ScalarLatticeSpec ScalarLatticeSpec::with_impurity_strength(double impurity_strength) const
{
    return ScalarLatticeSpec(sites_, boundary_, bonds_, impurity_site_, impurity_strength);
}

SectorPair decompose(const LatticeSpec& spec)
{
    const auto basis = decomposition_basis(spec);
    if (!basis) {
        throw Error(ErrorKind::NotDecomposable,
                    "bonds and gain mix tau_x and tau_z content; no fixed single-site basis diagonalises them");
    }
    // Pseudospin basis: eigenvalues s +- z of diag(s+z, s-z). Exchange basis: s +- x.
    const auto plus = [&](const SpinMatrix& m) { return *basis == SectorBasis::Exchange ? m.s + m.x : m.s + m.z; };
    const auto minus = [&](const SpinMatrix& m) { return *basis == SectorBasis::Exchange ? m.s - m.x : m.s - m.z; };

    std::vector<double> first_bonds;
    std::vector<double> second_bonds;
    for (const auto& bond : spec.profile().bonds()) {
        first_bonds.push_back(plus(bond));
        second_bonds.push_back(minus(bond));
    }
    const SpinMatrix gain = spec.effective_gain();
    return SectorPair{
        *basis,
        ScalarLatticeSpec(spec.sites(), spec.boundary(), std::move(first_bonds), spec.impurity_site(), plus(gain)),
        ScalarLatticeSpec(spec.sites(), spec.boundary(), std::move(second_bonds), spec.impurity_site(), minus(gain)),
    };
}

LatticeSpec recompose(const SectorPair& sectors)
{
    if (sectors.basis != SectorBasis::Exchange)
        throw Error(ErrorKind::InvalidArgument, "recompose expects exchange-basis sectors");
    const auto& s = sectors.first;
    const auto& a = sectors.second;
    if (s.sites() != a.sites() || s.boundary() != a.boundary() || s.impurity_site() != a.impurity_site())
        throw Error(ErrorKind::DimensionMismatch, "sectors describe different lattices");

    std::vector<SpinMatrix> bonds;
    for (std::size_t k = 0; k < s.bonds().size(); ++k) {
        const double ts = (s.bonds()[k] + a.bonds()[k]) / 2.0;
        const double td = (s.bonds()[k] - a.bonds()[k]) / 2.0;
        bonds.push_back({ts, td, 0.0});
    }
    auto profile = make_profile(std::move(bonds), s.sites(), s.boundary(), ProfileKind::Explicit, false);
    const SpinMatrix gain{(s.impurity_strength() + a.impurity_strength()) / 2.0,
                          (s.impurity_strength() - a.impurity_strength()) / 2.0, 0.0};
    return LatticeSpec(std::move(profile), s.impurity_site(), gain, 1.0);
}

ComplexMatrix assemble_scalar_hamiltonian(const ScalarLatticeSpec& spec)
{
    const int n = spec.sites();
    ComplexMatrix h(static_cast<std::size_t>(n));
    const auto bonds = spec.bonds();
    for (int k = 1; k <= static_cast<int>(bonds.size()); ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        const auto j = static_cast<std::size_t>(k == n ? 0 : k);
        h(i, j) += -bonds[i];
        h(j, i) += -bonds[i];
    }
    h(static_cast<std::size_t>(spec.impurity_site() - 1), static_cast<std::size_t>(spec.impurity_site() - 1)) +=
        Complex{0.0, spec.impurity_strength()};
    h(static_cast<std::size_t>(spec.mirror_site() - 1), static_cast<std::size_t>(spec.mirror_site() - 1)) +=
        Complex{0.0, -spec.impurity_strength()};
    return h;
}

DirectSumReport verify_direct_sum(const LatticeSpec& spec, double tolerance, const EigenOptions& options)
{
    const SectorPair sectors = decompose(spec);
    DirectSumReport report{sectors.basis, {}, {}, {}, 0.0, tolerance, false};
    report.full_spectrum = eigenvalues(assemble_hamiltonian(spec), options);
    report.first_spectrum = eigenvalues(assemble_scalar_hamiltonian(sectors.first), options);
    report.second_spectrum = eigenvalues(assemble_scalar_hamiltonian(sectors.second), options);
    sort_eigenvalues(report.full_spectrum);
    sort_eigenvalues(report.first_spectrum);
    sort_eigenvalues(report.second_spectrum);

    std::vector<Complex> combined = report.first_spectrum;
    combined.insert(combined.end(), report.second_spectrum.begin(), report.second_spectrum.end());
    report.max_distance = multiset_distance(report.full_spectrum, combined);
    report.pass = report.max_distance <= tolerance;
    return report;
}

} // namespace ptl
