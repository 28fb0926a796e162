#include <gtest/gtest.h>

#include <random>

#include "minkconic/minkconic.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

Vec2 rvec(std::mt19937_64& rng) {
    return unit_at_angle(uniform(rng, 0, 2 * std::numbers::pi)) * std::exp(uniform(rng, -2, 2));
}

}  // namespace

class SipAxioms : public ::testing::TestWithParam<double> {};

TEST_P(SipAxioms, HoldOnTenThousandSamples) {
    const double p = GetParam();
    const SipSpace S = SipSpace::lp(p);
    std::mt19937_64 rng(static_cast<std::uint64_t>(p * 1000));
    for (int k = 0; k < 10000; ++k) {
        const Vec2 x = rvec(rng), y = rvec(rng), z = rvec(rng);
        const double al = uniform(rng, -3, 3), be = uniform(rng, -3, 3), la = uniform(rng, -3, 3);
        const double nx = oracle::lp_norm(x, p), ny = oracle::lp_norm(y, p), nz = oracle::lp_norm(z, p);
        ASSERT_NEAR(sip(S, x, x), nx * nx, 1e-10 * nx * nx);
        ASSERT_NEAR(sip(S, y * al + z * be, x), al * sip(S, y, x) + be * sip(S, z, x),
                    1e-10 * (std::abs(al) * ny + std::abs(be) * nz) * nx);
        ASSERT_NEAR(sip(S, y, x * la), la * sip(S, y, x), 1e-10 * std::abs(la) * nx * ny);
        ASSERT_LE(std::abs(sip(S, y, x)), nx * ny * (1 + 1e-10));
    }
}

TEST_P(SipAxioms, DualityMapRoundTrip) {
    const SipSpace S = SipSpace::lp(GetParam());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 2000; ++k) {
        const Vec2 x = rvec(rng);
        const Vec2 j = duality_map(S, x);
        // ||J x||_q = ||x||_p and <x, J x> = ||x||^2.
        EXPECT_NEAR(oracle::lp_norm(j, S.q()), oracle::lp_norm(x, S.p()), 1e-12 * oracle::lp_norm(x, S.p()));
        const Vec2 back = inverse_duality(S, j);
        EXPECT_NEAR(back.x, x.x, 1e-12 * S.norm(x));
        EXPECT_NEAR(back.y, x.y, 1e-12 * S.norm(x));
    }
}

TEST_P(SipAxioms, GilesBirkhoffEquivalence) {
    // [y, x] = 0 exactly when x is Birkhoff orthogonal to y.
    const SipSpace S = SipSpace::lp(GetParam());
    std::mt19937_64 rng(11);
    int agree = 0;
    for (int k = 0; k < 1000; ++k) {
        const Vec2 x = rvec(rng);
        const Vec2 y = (k % 2 == 0) ? perp(duality_map(S, x)) * uniform(rng, 0.2, 3.0) : rvec(rng);
        const bool giles = std::abs(sip(S, y, x)) <= 1e-6 * S.norm(x) * S.norm(y);
        const bool birk = is_birkhoff_orthogonal(S.ball(), x, y, 1e-12);
        agree += giles == birk;
    }
    EXPECT_GE(agree, 999);
}

TEST_P(SipAxioms, AdjointIdentity) {
    const SipSpace S = SipSpace::lp(GetParam());
    std::mt19937_64 rng(5);
    for (int k = 0; k < 2000; ++k) {
        const LinearMap2 A{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
        const Vec2 x = rvec(rng), y = rvec(rng);
        const double lhs = sip(S, A(x), y);
        EXPECT_NEAR(lhs, sip(S, x, generalized_adjoint(S, A, y)), 1e-8 * (1 + std::abs(lhs)));
    }
}

INSTANTIATE_TEST_SUITE_P(Lp, SipAxioms, ::testing::Values(1.5, 2.0, 3.0, 5.0));

TEST(Sip, EuclideanIsInnerProduct) {
    const SipSpace S = SipSpace::lp(2.0);
    EXPECT_NEAR(sip(S, {1, 2}, {3, -4}), -5.0, 1e-14);
    const LinearMap2 A{1, 2, 3, 4};
    const Vec2 w = generalized_adjoint(S, A, {1, 1});
    EXPECT_NEAR(w.x, 4.0, 1e-13);
    EXPECT_NEAR(w.y, 6.0, 1e-13);
    EXPECT_TRUE(is_self_adjoint(S, {2, 1, 1, 3}));
    EXPECT_FALSE(is_self_adjoint(S, {2, 1, 0, 3}));
}

TEST(Sip, DiagonalMapsAreSelfAdjointOnlyWhenScalar) {
    // J is coordinatewise, so diag(a, b) commutes with it only up to the
    // power p - 1 of the ratio.
    const SipSpace S = SipSpace::lp(3.0);
    EXPECT_TRUE(is_self_adjoint(S, LinearMap2::diag(2, 2)));
    EXPECT_FALSE(is_self_adjoint(S, LinearMap2::diag(1, 2)));
}

TEST(Sip, NonlinearAdjointForPNot2) {
    const NonlinearityWitness w = adjoint_nonlinearity_witness(SipSpace::lp(3.0), {1, 2, 0, 1});
    EXPECT_GT(w.defect, 1e-3);
    const NonlinearityWitness w2 = adjoint_nonlinearity_witness(SipSpace::lp(2.0), {1, 2, 0, 1});
    EXPECT_LT(w2.defect, 1e-12);
}

TEST(Sip, ZeroDirectionsOfReflection) {
    const ConicZeros z = projective_conic_zeros(SipSpace::lp(2.0), LinearMap2::diag(1, -1));
    ASSERT_EQ(z.angles.size(), 2u);
    EXPECT_NEAR(z.angles[0], std::numbers::pi / 4, 1e-8);
    EXPECT_NEAR(z.angles[1], 3 * std::numbers::pi / 4, 1e-8);
    EXPECT_TRUE(z.arcs.empty());
    // Rotation by 90 degrees: [Au, u] vanishes everywhere at p = 2.
    const ConicZeros r = projective_conic_zeros(SipSpace::lp(2.0), LinearMap2::rotation(std::numbers::pi / 2));
    ASSERT_EQ(r.arcs.size(), 1u);
    EXPECT_TRUE(projective_conic_zeros(SipSpace::lp(2.0), LinearMap2::identity()).angles.empty());
}

TEST(Sip, RejectsBadInput) {
    EXPECT_THROW(SipSpace::lp(1.0), InvalidInput);
    EXPECT_THROW(SipSpace(UnitBall::lp_infinity()), InvalidInput);
    EXPECT_THROW(SipSpace(random_symmetric_polygon(4, 1)), InvalidInput);
    EXPECT_THROW(duality_map(SipSpace::lp(2), {0, 0}), InvalidInput);
    EXPECT_THROW(projective_conic_zeros(SipSpace::lp(2), {1, 2, 2, 4}), InvalidInput);
    EXPECT_EQ(sip(SipSpace::lp(3), {1, 1}, {0, 0}), 0.0);
}

TEST(Sip, SquareRoot) {
    const LinearMap2 B{1, 2, 0, 1};
    EXPECT_TRUE(is_square_of(B * B, B));
    EXPECT_FALSE(is_square_of(B, B));
}
