#include "ptlattice/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "ptlattice/errors.hpp"
#include "ptlattice/hamiltonian.hpp"

namespace ptl {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Replaces unset tolerances with their scale-relative defaults.
ThresholdOptions resolve(ThresholdOptions options, double scale)
{
    if (!(scale > 0.0))
        scale = 1.0;
    if (!options.tolerance)
        options.tolerance = kDefaultToleranceFactor * scale;
    if (!options.reality_tolerance)
        options.reality_tolerance = kDefaultRealityFactor * scale;
    if (!options.bracket_cap)
        options.bracket_cap = kDefaultBracketCapFactor * scale;
    if (!(*options.tolerance > 0.0) || !(*options.reality_tolerance > 0.0) || !(*options.bracket_cap > 0.0))
        throw Error(ErrorKind::InvalidArgument, "threshold tolerances and bracket cap must be positive");
    if (options.validation_points < 2)
        throw Error(ErrorKind::InvalidArgument, "validation scan needs at least 2 points");
    return options;
}

} // namespace

GainRay::GainRay(const SpinMatrix& direction)
{
    if (!direction.is_finite() || direction.is_zero())
        throw Error(ErrorKind::InvalidArgument, "gain ray direction must be finite and nonzero");
    direction_ = direction.scaled(1.0 / direction.max_abs_coefficient());
}

std::string_view to_string(ThresholdStatus status) noexcept
{
    switch (status) {
    case ThresholdStatus::Converged: return "converged";
    case ThresholdStatus::Reentrant: return "reentrant";
    case ThresholdStatus::NoUpperBracket: return "no-upper-bracket";
    case ThresholdStatus::AlwaysBroken: return "always-broken";
    case ThresholdStatus::NoConvergence: return "no-convergence";
    }
    return "unknown";
}

bool has_threshold(ThresholdStatus status) noexcept
{
    return status == ThresholdStatus::Converged || status == ThresholdStatus::Reentrant;
}

ThresholdResult find_threshold(const HamiltonianFamily& family, double scale, const ThresholdOptions& options)
{
    const ThresholdOptions opts = resolve(options, scale);
    if (!(scale > 0.0))
        scale = 1.0;
    const double tolerance = *opts.tolerance;
    const double cap = *opts.bracket_cap;

    ThresholdResult result;
    result.tolerance = tolerance;
    const auto broken = [&](double gamma) {
        ++result.evaluations;
        const auto values = eigenvalues(family(gamma), opts.eigen);
        double max_imag = 0.0;
        for (const auto& e : values)
            max_imag = std::max(max_imag, std::abs(e.imag()));
        return max_imag > *opts.reality_tolerance;
    };

    if (broken(0.0)) {
        result.status = ThresholdStatus::AlwaysBroken;
        return result;
    }

    double lo = 0.0;
    double hi = std::min(scale / 2.0, cap);
    while (!broken(hi)) {
        lo = hi;
        if (hi >= cap) {
            result.status = ThresholdStatus::NoUpperBracket;
            result.gamma_pt = kInfinity;
            result.lower = lo;
            result.upper = kInfinity;
            return result;
        }
        hi = std::min(2.0 * hi, cap);
    }

    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (broken(mid))
            hi = mid;
        else
            lo = mid;
    }
    result.lower = lo;
    result.upper = hi;
    result.gamma_pt = 0.5 * (lo + hi);

    // Interior points of an evenly spaced grid on [0, lo]; both ends are known unbroken.
    const int points = opts.validation_points;
    for (int i = 1; i + 1 < points; ++i) {
        if (broken(lo * i / (points - 1))) {
            result.status = ThresholdStatus::Reentrant;
            break;
        }
    }
    return result;
}

ThresholdResult find_threshold(const LatticeSpec& base, const GainRay& ray, const ThresholdOptions& options)
{
    const LatticeSpec unit = base.with_gain(ray.direction(), 0.0);
    return find_threshold([&](double gamma) { return assemble_hamiltonian(unit.with_gain_scale(gamma)); },
                          base.profile().reference_scale(), options);
}

ThresholdResult find_threshold(const ScalarLatticeSpec& base, const ThresholdOptions& options)
{
    const double unit = base.impurity_strength();
    return find_threshold(
        [&](double gamma) { return assemble_scalar_hamiltonian(base.with_impurity_strength(gamma * unit)); },
        base.reference_scale(), options);
}

SectorThresholds sector_threshold_min(const LatticeSpec& base, const GainRay& ray, const ThresholdOptions& options)
{
    const ThresholdOptions opts = resolve(options, base.profile().reference_scale());
    const SectorPair sectors = decompose(base.with_gain(ray.direction(), 1.0));

    SectorThresholds out{sectors.basis, find_threshold(sectors.first, opts), find_threshold(sectors.second, opts),
                         kInfinity};
    for (const auto* r : {&out.first, &out.second}) {
        if (has_threshold(r->status))
            out.gamma_pt = std::min(out.gamma_pt, r->gamma_pt);
        else if (r->status == ThresholdStatus::AlwaysBroken)
            out.gamma_pt = 0.0;
    }
    return out;
}

std::vector<int> admissible_impurity_sites(int sites)
{
    std::vector<int> out;
    for (int m = 1; m <= sites / 2; ++m)
        out.push_back(m);
    return out;
}

PhaseDiagram phase_diagram(const LatticeSpec& base, std::span<const int> impurity_sites, const GainRay& ray,
                           const ThresholdOptions& options, int workers)
{
    for (std::size_t i = 0; i < impurity_sites.size(); ++i) {
        validate_impurity_site(base.sites(), impurity_sites[i]);
        if (i > 0 && impurity_sites[i] <= impurity_sites[i - 1])
            throw Error(ErrorKind::InvalidArgument, "impurity sites must be strictly increasing");
    }
    const ThresholdOptions opts = resolve(options, base.profile().reference_scale());

    PhaseDiagram diagram;
    diagram.sites = base.sites();
    diagram.boundary = base.boundary();
    diagram.profile_kind = base.profile().kind();
    diagram.mixing_ratio = base.profile().mixing_ratio();
    diagram.direction = ray.direction();
    diagram.rows.resize(impurity_sites.size());

    detail::parallel_for(impurity_sites.size(), workers, [&](std::size_t i) {
        const int m = impurity_sites[i];
        PhaseRow& row = diagram.rows[i];
        row.impurity_site = m;
        row.mu = static_cast<double>(m) / static_cast<double>(base.sites());
        try {
            row.result = find_threshold(base.with_impurity_site(m), ray, opts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoConvergence)
                throw;
            row.result = ThresholdResult{};
            row.result.gamma_pt = std::numeric_limits<double>::quiet_NaN();
            row.result.tolerance = *opts.tolerance;
            row.result.status = ThresholdStatus::NoConvergence;
        }
    });
    return diagram;
}

} // namespace ptl
