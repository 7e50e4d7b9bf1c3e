#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace ptl {

/// Real symmetric 2x2 matrix s*1 + x*tau_x + z*tau_z acting on the local
/// pseudospin doublet. Represents a tunneling matrix T(k) or a gain matrix.
struct SpinMatrix {
    double s = 0.0;
    double x = 0.0;
    double z = 0.0;

    static constexpr SpinMatrix identity(double value = 1.0) { return {value, 0.0, 0.0}; }
    static constexpr SpinMatrix tau_x(double value = 1.0) { return {0.0, value, 0.0}; }
    static constexpr SpinMatrix tau_z(double value = 1.0) { return {0.0, 0.0, value}; }

    /// Row-major entries {(+,+), (+,-), (-,+), (-,-)}.
    constexpr std::array<double, 4> entries() const { return {s + z, x, x, s - z}; }

    bool is_finite() const { return std::isfinite(s) && std::isfinite(x) && std::isfinite(z); }

    double max_abs_coefficient() const { return std::max({std::abs(s), std::abs(x), std::abs(z)}); }

    bool is_zero() const { return s == 0.0 && x == 0.0 && z == 0.0; }

    constexpr SpinMatrix scaled(double factor) const { return {s * factor, x * factor, z * factor}; }

    friend constexpr bool operator==(const SpinMatrix&, const SpinMatrix&) = default;
};

} // namespace ptl
