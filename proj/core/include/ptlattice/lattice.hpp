#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ptlattice/spin_matrix.hpp"

namespace ptl {

enum class Boundary { Open, Periodic };

enum class ProfileKind { Constant, ParabolicSqrt, Explicit, Ring };

std::string_view to_string(Boundary boundary) noexcept;
std::string_view to_string(ProfileKind kind) noexcept;

/// Number of bonds carried by an N-site lattice: N-1 open, N periodic.
constexpr int bond_count(int sites, Boundary boundary) noexcept
{
    return boundary == Boundary::Open ? sites - 1 : sites;
}

struct ConstantProfile {
    double t_s = 1.0;
    double t_d = 0.0;
};

/// t_s(k) = t0 * sqrt(k (N - k)), t_d(k) = mixing_fraction * t_s(k).
struct ParabolicSqrtProfile {
    double t0 = 1.0;
    double mixing_fraction = 0.0;
};

struct ExplicitProfile {
    std::vector<SpinMatrix> bonds;
    /// Skips the |x| <= s and s >= 0 amplitude rule (parity is always enforced).
    bool force = false;
};

using ProfileParams = std::variant<ConstantProfile, ParabolicSqrtProfile, ExplicitProfile>;

/// Nearest-neighbour tunneling matrices of a parity-symmetric lattice.
///
/// Bond k (1-based) couples site k to site k+1; for periodic lattices the
/// last bond couples site N back to site 1. Parity symmetry requires
/// bond(k) == bond(N-k) for k = 1..N-1.
class TunnelingProfile {
public:
    int sites() const noexcept { return sites_; }
    Boundary boundary() const noexcept { return boundary_; }
    ProfileKind kind() const noexcept { return kind_; }
    std::span<const SpinMatrix> bonds() const noexcept { return bonds_; }
    const SpinMatrix& bond(int k) const { return bonds_.at(static_cast<std::size_t>(k - 1)); }

    /// t_d/t_s for the built-in families; empty for explicit bond lists.
    std::optional<double> mixing_ratio() const noexcept { return mixing_ratio_; }

    /// Largest |coefficient| over all bonds; energies are measured in this unit.
    double reference_scale() const noexcept;

    friend TunnelingProfile build_profile(const ProfileParams& params, int sites, Boundary boundary);
    friend TunnelingProfile make_profile(std::vector<SpinMatrix> bonds, int sites, Boundary boundary,
                                         ProfileKind kind, bool enforce_amplitudes);

private:
    TunnelingProfile(int sites, Boundary boundary, ProfileKind kind, std::vector<SpinMatrix> bonds,
                     std::optional<double> mixing_ratio);

    int sites_;
    Boundary boundary_;
    ProfileKind kind_;
    std::vector<SpinMatrix> bonds_;
    std::optional<double> mixing_ratio_;
};

/// Throws Error{BadLength, NonParitySymmetric, NegativeAmplitude, InvalidArgument}.
TunnelingProfile build_profile(const ProfileParams& params, int sites, Boundary boundary);

/// Validating constructor shared by the built-in families and the ring builder.
TunnelingProfile make_profile(std::vector<SpinMatrix> bonds, int sites, Boundary boundary,
                              ProfileKind kind, bool enforce_amplitudes);

/// Full problem definition: profile, impurity pair (m, N+1-m), gain matrix and
/// the scalar gamma multiplying it. Immutable; every instance is valid.
class LatticeSpec {
public:
    /// Throws Error{CenterImpurity} for m = (N+1)/2 on odd lattices and
    /// Error{InvalidArgument} for any other site outside 1..floor(N/2).
    LatticeSpec(TunnelingProfile profile, int impurity_site, SpinMatrix gain, double gain_scale = 1.0);

    const TunnelingProfile& profile() const noexcept { return profile_; }
    int sites() const noexcept { return profile_.sites(); }
    Boundary boundary() const noexcept { return profile_.boundary(); }
    int impurity_site() const noexcept { return impurity_site_; }
    int mirror_site() const noexcept { return sites() + 1 - impurity_site_; }
    const SpinMatrix& gain() const noexcept { return gain_; }
    double gain_scale() const noexcept { return gain_scale_; }

    /// gain_scale * gain, the matrix Gamma whose +i / -i multiples sit at m / m-bar.
    SpinMatrix effective_gain() const noexcept { return gain_.scaled(gain_scale_); }

    LatticeSpec with_gain_scale(double gain_scale) const;
    LatticeSpec with_impurity_site(int impurity_site) const;
    LatticeSpec with_gain(const SpinMatrix& gain, double gain_scale) const;

private:
    TunnelingProfile profile_;
    int impurity_site_;
    SpinMatrix gain_;
    double gain_scale_;
};

/// Shared site-range rule for the impurity pair; throws on violation.
void validate_impurity_site(int sites, int impurity_site);

} // namespace ptl
