#include "ptlattice/ring.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ptlattice/errors.hpp"

namespace ptl {

TunnelingProfile ring_profile(const RingSpec& ring)
{
    if (ring.sites < 3)
        throw Error(ErrorKind::InvalidArgument, "ring needs N >= 3, got " + std::to_string(ring.sites));
    if (ring.outer.z != 0.0 || ring.inner.z != 0.0)
        throw Error(ErrorKind::InvalidArgument, "ring arms must be built from 1 and tau_x only");
    validate_impurity_site(ring.sites, ring.impurity_site);

    const int m = ring.impurity_site;
    const int m_bar = ring.sites + 1 - m;
    std::vector<SpinMatrix> bonds;
    bonds.reserve(static_cast<std::size_t>(ring.sites));
    for (int k = 1; k <= ring.sites; ++k)
        bonds.push_back(k >= m && k < m_bar ? ring.inner : ring.outer);
    return make_profile(std::move(bonds), ring.sites, Boundary::Periodic, ProfileKind::Ring, true);
}

LatticeSpec ring_lattice(const RingSpec& ring, const SpinMatrix& gain, double gain_scale)
{
    return LatticeSpec(ring_profile(ring), ring.impurity_site, gain, gain_scale);
}

double ring_threshold_formula(const RingSpec& ring)
{
    const double symmetric = (ring.outer.s + ring.outer.x) - (ring.inner.s + ring.inner.x);
    const double antisymmetric = (ring.outer.s - ring.outer.x) - (ring.inner.s - ring.inner.x);
    if (symmetric < 0.0 || antisymmetric < 0.0) {
        throw Error(ErrorKind::OutOfRegime, "ring formula needs t0 >= tb in both sectors (got t^S_0 - t^S_b = " +
                                                std::to_string(symmetric) + ", t^A_0 - t^A_b = " +
                                                std::to_string(antisymmetric) + ")");
    }
    return std::min(symmetric, antisymmetric);
}

} // namespace ptl
