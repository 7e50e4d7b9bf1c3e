#include "ptlattice/lattice.hpp"

#include <cmath>
#include <string>

#include "ptlattice/errors.hpp"

namespace ptl {

std::string_view to_string(Boundary boundary) noexcept
{
    return boundary == Boundary::Open ? "open" : "periodic";
}

std::string_view to_string(ProfileKind kind) noexcept
{
    switch (kind) {
    case ProfileKind::Constant: return "constant";
    case ProfileKind::ParabolicSqrt: return "parabolic-sqrt";
    case ProfileKind::Explicit: return "explicit";
    case ProfileKind::Ring: return "ring";
    }
    return "unknown";
}

namespace {

void check_sites(int sites, Boundary boundary)
{
    if (sites < 2)
        throw Error(ErrorKind::InvalidArgument, "lattice needs N >= 2, got " + std::to_string(sites));
    if (boundary == Boundary::Periodic && sites < 3)
        throw Error(ErrorKind::InvalidArgument, "periodic lattice needs N >= 3, got " + std::to_string(sites));
}

void check_amplitudes(const SpinMatrix& bond, int k)
{
    if (bond.s < 0.0 || bond.x < 0.0)
        throw Error(ErrorKind::NegativeAmplitude, "bond " + std::to_string(k) + " has a negative amplitude");
    if (bond.x > bond.s)
        throw Error(ErrorKind::InvalidArgument,
                    "bond " + std::to_string(k) + " has mode-mixing amplitude larger than t_s");
}

} // namespace

TunnelingProfile::TunnelingProfile(int sites, Boundary boundary, ProfileKind kind, std::vector<SpinMatrix> bonds,
                                   std::optional<double> mixing_ratio)
    : sites_(sites), boundary_(boundary), kind_(kind), bonds_(std::move(bonds)), mixing_ratio_(mixing_ratio)
{
}

double TunnelingProfile::reference_scale() const noexcept
{
    double scale = 0.0;
    for (const auto& bond : bonds_)
        scale = std::max(scale, bond.max_abs_coefficient());
    return scale;
}

TunnelingProfile make_profile(std::vector<SpinMatrix> bonds, int sites, Boundary boundary, ProfileKind kind,
                              bool enforce_amplitudes)
{
    check_sites(sites, boundary);
    const int expected = bond_count(sites, boundary);
    if (static_cast<int>(bonds.size()) != expected) {
        throw Error(ErrorKind::BadLength, "expected " + std::to_string(expected) + " bonds for N=" +
                                              std::to_string(sites) + " (" + std::string(to_string(boundary)) +
                                              "), got " + std::to_string(bonds.size()));
    }
    for (int k = 1; k <= expected; ++k) {
        const auto& bond = bonds[static_cast<std::size_t>(k - 1)];
        if (!bond.is_finite())
            throw Error(ErrorKind::InvalidArgument, "bond " + std::to_string(k) + " is not finite");
        if (enforce_amplitudes)
            check_amplitudes(bond, k);
    }
    for (int k = 1; k < sites; ++k) {
        if (bonds[static_cast<std::size_t>(k - 1)] != bonds[static_cast<std::size_t>(sites - k - 1)]) {
            throw Error(ErrorKind::NonParitySymmetric,
                        "bond " + std::to_string(k) + " differs from bond " + std::to_string(sites - k));
        }
    }
    std::optional<double> ratio;
    return TunnelingProfile(sites, boundary, kind, std::move(bonds), ratio);
}

TunnelingProfile build_profile(const ProfileParams& params, int sites, Boundary boundary)
{
    check_sites(sites, boundary);
    const int count = bond_count(sites, boundary);

    if (const auto* constant = std::get_if<ConstantProfile>(&params)) {
        check_amplitudes(SpinMatrix{constant->t_s, constant->t_d, 0.0}, 1);
        std::vector<SpinMatrix> bonds(static_cast<std::size_t>(count), SpinMatrix{constant->t_s, constant->t_d, 0.0});
        auto profile = make_profile(std::move(bonds), sites, boundary, ProfileKind::Constant, true);
        if (constant->t_s > 0.0)
            profile.mixing_ratio_ = constant->t_d / constant->t_s;
        return profile;
    }

    if (const auto* parabolic = std::get_if<ParabolicSqrtProfile>(&params)) {
        if (parabolic->t0 < 0.0 || parabolic->mixing_fraction < 0.0)
            throw Error(ErrorKind::NegativeAmplitude, "parabolic-sqrt profile needs t0 >= 0 and t_d fraction >= 0");
        if (parabolic->mixing_fraction > 1.0)
            throw Error(ErrorKind::InvalidArgument, "parabolic-sqrt t_d fraction must be <= 1");
        std::vector<SpinMatrix> bonds;
        bonds.reserve(static_cast<std::size_t>(count));
        for (int k = 1; k <= count; ++k) {
            const double ts = parabolic->t0 * std::sqrt(static_cast<double>(k) * static_cast<double>(sites - k));
            bonds.push_back({ts, parabolic->mixing_fraction * ts, 0.0});
        }
        auto profile = make_profile(std::move(bonds), sites, boundary, ProfileKind::ParabolicSqrt, true);
        profile.mixing_ratio_ = parabolic->mixing_fraction;
        return profile;
    }

    const auto& explicit_profile = std::get<ExplicitProfile>(params);
    return make_profile(explicit_profile.bonds, sites, boundary, ProfileKind::Explicit, !explicit_profile.force);
}

void validate_impurity_site(int sites, int impurity_site)
{
    if (sites % 2 == 1 && impurity_site == (sites + 1) / 2) {
        throw Error(ErrorKind::CenterImpurity,
                    "m=" + std::to_string(impurity_site) + " is the center site of the N=" + std::to_string(sites) +
                        " lattice; gain and loss would cancel");
    }
    if (impurity_site < 1 || impurity_site > sites / 2) {
        throw Error(ErrorKind::InvalidArgument, "impurity site m=" + std::to_string(impurity_site) +
                                                    " outside 1.." + std::to_string(sites / 2));
    }
}

LatticeSpec::LatticeSpec(TunnelingProfile profile, int impurity_site, SpinMatrix gain, double gain_scale)
    : profile_(std::move(profile)), impurity_site_(impurity_site), gain_(gain), gain_scale_(gain_scale)
{
    validate_impurity_site(profile_.sites(), impurity_site_);
    if (!gain_.is_finite())
        throw Error(ErrorKind::InvalidArgument, "gain matrix is not finite");
    if (!std::isfinite(gain_scale_) || gain_scale_ < 0.0)
        throw Error(ErrorKind::InvalidArgument, "gain scale must be finite and >= 0");
}

LatticeSpec LatticeSpec::with_gain_scale(double gain_scale) const
{
    return LatticeSpec(profile_, impurity_site_, gain_, gain_scale);
}

LatticeSpec LatticeSpec::with_impurity_site(int impurity_site) const
{
    return LatticeSpec(profile_, impurity_site, gain_, gain_scale_);
}

LatticeSpec LatticeSpec::with_gain(const SpinMatrix& gain, double gain_scale) const
{
    return LatticeSpec(profile_, impurity_site_, gain, gain_scale);
}

} // namespace ptl
