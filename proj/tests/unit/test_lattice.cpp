#include <cmath>

#include <gtest/gtest.h>

#include "ptlattice/errors.hpp"
#include "ptlattice/lattice.hpp"

using namespace ptl;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected ptl::Error";
    return ErrorKind::InvalidArgument;
}

std::vector<SpinMatrix> scalar_bonds(std::initializer_list<double> values)
{
    std::vector<SpinMatrix> out;
    for (double v : values)
        out.push_back(SpinMatrix::identity(v));
    return out;
}

} // namespace

TEST(SpinMatrix, EntriesAreRealSymmetric)
{
    const SpinMatrix m{0.5, 0.2, -0.3};
    const auto e = m.entries();
    EXPECT_DOUBLE_EQ(e[0], 0.2);
    EXPECT_DOUBLE_EQ(e[1], 0.2);
    EXPECT_DOUBLE_EQ(e[2], 0.2);
    EXPECT_DOUBLE_EQ(e[3], 0.8);
}

TEST(BuildProfile, ConstantOpen)
{
    const auto profile = build_profile(ConstantProfile{1.0, 0.0}, 4, Boundary::Open);
    ASSERT_EQ(profile.bonds().size(), 3u);
    for (const auto& bond : profile.bonds())
        EXPECT_EQ(bond, (SpinMatrix{1.0, 0.0, 0.0}));
    EXPECT_EQ(profile.kind(), ProfileKind::Constant);
    EXPECT_DOUBLE_EQ(*profile.mixing_ratio(), 0.0);
}

TEST(BuildProfile, ConstantPeriodicHasClosingBond)
{
    const auto profile = build_profile(ConstantProfile{1.0, 0.4}, 6, Boundary::Periodic);
    EXPECT_EQ(profile.bonds().size(), 6u);
    EXPECT_DOUBLE_EQ(profile.reference_scale(), 1.0);
}

TEST(BuildProfile, ExplicitParityCheck)
{
    EXPECT_NO_THROW(build_profile(ExplicitProfile{scalar_bonds({1, 2, 1})}, 4, Boundary::Open));
    EXPECT_EQ(kind_of([] { build_profile(ExplicitProfile{scalar_bonds({1, 2, 3})}, 4, Boundary::Open); }),
              ErrorKind::NonParitySymmetric);
}

TEST(BuildProfile, ExplicitLengthMismatch)
{
    EXPECT_EQ(kind_of([] { build_profile(ExplicitProfile{scalar_bonds({1, 1})}, 4, Boundary::Open); }),
              ErrorKind::BadLength);
    EXPECT_EQ(kind_of([] { build_profile(ExplicitProfile{scalar_bonds({1, 2, 1})}, 4, Boundary::Periodic); }),
              ErrorKind::BadLength);
}

TEST(BuildProfile, PeriodicClosingBondIsUnconstrainedByParity)
{
    EXPECT_NO_THROW(build_profile(ExplicitProfile{scalar_bonds({1, 2, 1, 7})}, 4, Boundary::Periodic));
}

TEST(BuildProfile, NegativeAmplitudeRejected)
{
    EXPECT_EQ(kind_of([] { build_profile(ConstantProfile{-1.0, 0.0}, 4, Boundary::Open); }),
              ErrorKind::NegativeAmplitude);
    EXPECT_EQ(kind_of([] { build_profile(ExplicitProfile{scalar_bonds({1, -2, 1})}, 4, Boundary::Open); }),
              ErrorKind::NegativeAmplitude);
}

TEST(BuildProfile, MixingAboveTsNeedsForce)
{
    EXPECT_EQ(kind_of([] { build_profile(ConstantProfile{1.0, 1.5}, 4, Boundary::Open); }),
              ErrorKind::InvalidArgument);
    std::vector<SpinMatrix> bonds(3, SpinMatrix{1.0, 1.5, 0.0});
    EXPECT_EQ(kind_of([&] { build_profile(ExplicitProfile{bonds, false}, 4, Boundary::Open); }),
              ErrorKind::InvalidArgument);
    EXPECT_NO_THROW(build_profile(ExplicitProfile{bonds, true}, 4, Boundary::Open));
}

TEST(BuildProfile, ParabolicSqrtN5)
{
    // sqrt(k (5 - k)) for k = 1..4: 2, sqrt 6, sqrt 6, 2.
    const auto profile = build_profile(ParabolicSqrtProfile{1.0, 0.0}, 5, Boundary::Open);
    ASSERT_EQ(profile.bonds().size(), 4u);
    EXPECT_DOUBLE_EQ(profile.bond(1).s, 2.0);
    EXPECT_DOUBLE_EQ(profile.bond(2).s, std::sqrt(6.0));
    EXPECT_DOUBLE_EQ(profile.bond(3).s, std::sqrt(6.0));
    EXPECT_DOUBLE_EQ(profile.bond(4).s, 2.0);
}

TEST(BuildProfile, ParabolicSqrtMixingFraction)
{
    const auto profile = build_profile(ParabolicSqrtProfile{0.5, 0.4}, 6, Boundary::Open);
    for (const auto& bond : profile.bonds())
        EXPECT_DOUBLE_EQ(bond.x, 0.4 * bond.s);
}

TEST(BuildProfile, TooSmall)
{
    EXPECT_EQ(kind_of([] { build_profile(ConstantProfile{}, 1, Boundary::Open); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { build_profile(ConstantProfile{}, 2, Boundary::Periodic); }), ErrorKind::InvalidArgument);
}

TEST(LatticeSpec, ImpuritySiteRange)
{
    const auto even = build_profile(ConstantProfile{}, 6, Boundary::Open);
    EXPECT_NO_THROW(LatticeSpec(even, 3, SpinMatrix::tau_z()));
    EXPECT_EQ(kind_of([&] { LatticeSpec(even, 4, SpinMatrix::tau_z()); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { LatticeSpec(even, 0, SpinMatrix::tau_z()); }), ErrorKind::InvalidArgument);

    const auto odd = build_profile(ConstantProfile{}, 41, Boundary::Open);
    EXPECT_EQ(kind_of([&] { LatticeSpec(odd, 21, SpinMatrix::tau_z()); }), ErrorKind::CenterImpurity);
    const LatticeSpec edge(odd, 1, SpinMatrix::tau_z());
    EXPECT_EQ(edge.mirror_site(), 41);
}

TEST(LatticeSpec, GainScaleMustBeNonNegative)
{
    const auto profile = build_profile(ConstantProfile{}, 4, Boundary::Open);
    EXPECT_EQ(kind_of([&] { LatticeSpec(profile, 1, SpinMatrix::tau_z(), -0.1); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { LatticeSpec(profile, 1, SpinMatrix{NAN, 0, 0}); }), ErrorKind::InvalidArgument);
}

TEST(LatticeSpec, EffectiveGain)
{
    const auto profile = build_profile(ConstantProfile{}, 4, Boundary::Open);
    const LatticeSpec spec(profile, 2, SpinMatrix{0.3, 0.1, 0.0}, 2.0);
    EXPECT_EQ(spec.effective_gain(), (SpinMatrix{0.6, 0.2, 0.0}));
    EXPECT_EQ(spec.with_gain_scale(0.5).effective_gain(), (SpinMatrix{0.15, 0.05, 0.0}));
}
