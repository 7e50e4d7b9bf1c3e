#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ptlattice/complex_matrix.hpp"
#include "ptlattice/lattice.hpp"
#include "ptlattice/sectors.hpp"
#include "ptlattice/spectral.hpp"

namespace ptl {

/// One-parameter gain family Gamma(gamma) = gamma * direction, gamma >= 0.
/// The direction is normalised so that max(|s|, |x|, |z|) = 1.
class GainRay {
public:
    /// Throws Error{InvalidArgument} for a zero or non-finite direction.
    explicit GainRay(const SpinMatrix& direction);

    static GainRay tau_z() { return GainRay{SpinMatrix::tau_z()}; }
    static GainRay tau_x() { return GainRay{SpinMatrix::tau_x()}; }
    static GainRay identity() { return GainRay{SpinMatrix::identity()}; }

    const SpinMatrix& direction() const noexcept { return direction_; }

    friend bool operator==(const GainRay&, const GainRay&) = default;

private:
    SpinMatrix direction_;
};

enum class ThresholdStatus {
    Converged,
    /// Converged, but the validation scan below the bracket found a broken point.
    Reentrant,
    NoUpperBracket,
    AlwaysBroken,
    NoConvergence,
};

std::string_view to_string(ThresholdStatus status) noexcept;

/// Converged or Reentrant: a finite threshold was bracketed.
bool has_threshold(ThresholdStatus status) noexcept;

struct ThresholdResult {
    double gamma_pt = 0.0;
    /// Largest gamma known unbroken.
    double lower = 0.0;
    /// Smallest gamma known broken (+inf without an upper bracket).
    double upper = 0.0;
    double tolerance = 0.0;
    int evaluations = 0;
    ThresholdStatus status = ThresholdStatus::Converged;
};

/// Absolute values; unset fields default to factor * reference scale.
struct ThresholdOptions {
    std::optional<double> tolerance;          // 1e-4 * scale
    std::optional<double> reality_tolerance;  // 1e-8 * scale
    std::optional<double> bracket_cap;        // 8 * scale
    int validation_points = 16;
    EigenOptions eigen;
};

inline constexpr double kDefaultToleranceFactor = 1e-4;
inline constexpr double kDefaultBracketCapFactor = 8.0;

using HamiltonianFamily = std::function<ComplexMatrix(double gamma)>;

/// Bisection on the broken/unbroken indicator along gamma >= 0.
///
/// The upper bracket is found by doubling from scale/2 up to the cap, then
/// bisected until its width is <= tolerance; gamma_pt is the midpoint. A scan
/// of validation_points evenly spaced values on [0, lower] flags re-entrance.
ThresholdResult find_threshold(const HamiltonianFamily& family, double scale, const ThresholdOptions& options = {});

/// gamma -> spec with gain = ray direction and gain scale gamma.
ThresholdResult find_threshold(const LatticeSpec& base, const GainRay& ray, const ThresholdOptions& options = {});

/// gamma -> scalar lattice with impurity strength gamma * base.impurity_strength().
ThresholdResult find_threshold(const ScalarLatticeSpec& base, const ThresholdOptions& options = {});

struct SectorThresholds {
    SectorBasis basis;
    ThresholdResult first;
    ThresholdResult second;
    /// min over sectors; a sector without an upper bracket counts as +inf.
    double gamma_pt = 0.0;
};

/// Decomposes base (with gain = ray) and bisects each scalar sector.
/// Throws Error{NotDecomposable}.
SectorThresholds sector_threshold_min(const LatticeSpec& base, const GainRay& ray,
                                      const ThresholdOptions& options = {});

struct PhaseRow {
    int impurity_site = 0;
    double mu = 0.0;
    ThresholdResult result;
};

struct PhaseDiagram {
    int sites = 0;
    Boundary boundary = Boundary::Open;
    ProfileKind profile_kind = ProfileKind::Constant;
    std::optional<double> mixing_ratio;
    SpinMatrix direction;
    std::vector<PhaseRow> rows;
};

/// One independent threshold search per impurity site, spread over `workers`
/// threads; rows come back ordered by m regardless of scheduling. A row whose
/// eigensolve fails carries status NoConvergence instead of aborting the sweep.
/// Throws Error{InvalidArgument} unless impurity_sites is strictly increasing
/// and within 1..floor(N/2).
PhaseDiagram phase_diagram(const LatticeSpec& base, std::span<const int> impurity_sites, const GainRay& ray,
                           const ThresholdOptions& options = {}, int workers = 1);

/// 1..floor(N/2), excluding the odd-N center.
std::vector<int> admissible_impurity_sites(int sites);

} // namespace ptl
