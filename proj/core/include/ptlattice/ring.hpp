#pragma once

#include "ptlattice/lattice.hpp"
#include "ptlattice/spin_matrix.hpp"

namespace ptl {

/// Periodic lattice whose gain site m and loss site N+1-m are joined by two
/// arms of constant tunneling. Bonds m .. N-m (the sites strictly between m
/// and m-bar in increasing index) carry `inner`; all others, including the
/// closing bond N -> 1, carry `outer`.
struct RingSpec {
    int sites = 0;
    int impurity_site = 1;
    SpinMatrix outer;
    SpinMatrix inner;
};

/// Throws Error{InvalidArgument} for N < 3 or tau_z content on either arm;
/// amplitude rule as for built-in profiles.
TunnelingProfile ring_profile(const RingSpec& ring);

LatticeSpec ring_lattice(const RingSpec& ring, const SpinMatrix& gain, double gain_scale);

/// min(t^S_0 - t^S_b, t^A_0 - t^A_b) with t^{S/A} = s +- x on each arm.
/// Throws Error{OutOfRegime} when either difference is negative.
double ring_threshold_formula(const RingSpec& ring);

} // namespace ptl
