#include <gtest/gtest.h>

#include "minkconic/minkconic.hpp"

using namespace mink;

TEST(Loci, ResidualsOfEuclideanConics) {
    const UnitBall E = UnitBall::euclidean();
    EXPECT_NEAR(residual(E, EllipseFoci{{-3, 0}, {3, 0}, 5}, {5, 0}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, EllipseFoci{{-3, 0}, {3, 0}, 5}, {0, 4}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, HyperbolaFoci{{-2, 0}, {2, 0}, 1}, {1, 0}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, LeadingLineConic{{0, 1}, Line::horizontal(0), 1.0}, {1, 1}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, Bisector{{-1, 0}, {1, 0}}, {0, 7}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, DSegment{{-1, 0}, {1, 0}}, {0.3, 0}), 0.0, 1e-14);
    EXPECT_NEAR(residual(E, EllipseLeadingCircle{10, {6, 0}}, {8, 0}), 0.0, 1e-14);
}

TEST(Loci, MembershipSigns) {
    const UnitBall E = UnitBall::euclidean();
    const EllipseFoci e{{-3, 0}, {3, 0}, 5};
    EXPECT_EQ(membership(E, e, {0, 0}), Membership::Interior);
    EXPECT_EQ(membership(E, e, {5, 0}), Membership::On);
    EXPECT_EQ(membership(E, e, {6, 0}), Membership::Exterior);
    // Leading-line ellipse: the focus side is inside.
    const LeadingLineConic l{{0, 0}, Line::vertical(4), 2.0};
    EXPECT_EQ(membership(E, l, {0, 0}), Membership::Interior);
    EXPECT_EQ(membership(E, l, {-10, 0}), Membership::Exterior);
}

TEST(Loci, LeadingCircleTangencyMatchesReducedResidual) {
    for (const UnitBall& B : {UnitBall::lp(1.5), UnitBall::lp_infinity(), random_symmetric_polygon(4, 2)}) {
        const EllipseLeadingCircle s{3.0, {0.8, 0.3}};
        for (int k = 0; k < 90; ++k) {
            const Vec2 dir = unit_at_angle(k * 0.07);
            // Walk out from the focus half-point until the residual changes sign.
            double lo = 0, hi = 10;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (residual(B, s, s.focus * 0.5 + dir * mid) < 0 ? lo : hi) = mid;
            }
            const Vec2 z = s.focus * 0.5 + dir * lo;
            EXPECT_TRUE(tangency_membership_leading_circle(B, s, z, 1e-9));
            EXPECT_FALSE(tangency_membership_leading_circle(B, s, s.focus * 0.5 + dir * (lo * 0.8), 1e-9));
        }
    }
}

TEST(Loci, Degeneracy) {
    const UnitBall E = UnitBall::euclidean();
    EXPECT_EQ(classify_degeneracy(E, EllipseFoci{{-1, 0}, {1, 0}, 0.5}), Degeneracy::Empty);
    EXPECT_EQ(classify_degeneracy(E, EllipseFoci{{-1, 0}, {1, 0}, 1}), Degeneracy::DSegmentSet);
    EXPECT_EQ(classify_degeneracy(E, EllipseFoci{{-1, 0}, {1, 0}, 2}), Degeneracy::Nondegenerate);
    EXPECT_EQ(classify_degeneracy(E, HyperbolaFoci{{-1, 0}, {1, 0}, 0}), Degeneracy::BisectorSet);
    EXPECT_EQ(classify_degeneracy(E, HyperbolaFoci{{-1, 0}, {1, 0}, 1}), Degeneracy::RaysOrCones);
    EXPECT_EQ(classify_degeneracy(E, HyperbolaFoci{{-1, 0}, {1, 0}, 2}), Degeneracy::Empty);
}

TEST(Loci, ValidationRejectsBadSpecs) {
    const UnitBall E = UnitBall::euclidean();
    EXPECT_THROW(validate(E, EllipseFoci{{0, 0}, {0, 0}, 1}), InvalidInput);
    EXPECT_THROW(validate(E, EllipseFoci{{0, 0}, {1, 0}, -1}), InvalidInput);
    EXPECT_THROW(validate(E, EllipseFoci{{NAN, 0}, {1, 0}, 1}), InvalidInput);
    EXPECT_THROW(validate(E, EllipseLeadingCircle{1, {2, 0}}), InvalidInput);
    EXPECT_THROW(validate(E, HyperbolaLeadingCircle{2, {1, 0}}), InvalidInput);
    EXPECT_THROW(validate(E, LeadingLineConic{{0, 0}, Line::horizontal(0), 1}), InvalidInput);
    EXPECT_THROW(validate(E, LeadingLineConic{{0, 1}, Line::horizontal(0), 0}), InvalidInput);
}

TEST(Loci, LinfBisectorHasInterior) {
    // x - y along an axis: above and below the strip |z1| < |z2| - 1 both
    // distances equal |z2|, so the bisector contains two quadrant-like regions.
    const UnitBall B = UnitBall::lp_infinity();
    const Bisector b{{-1, 0}, {1, 0}};
    EXPECT_EQ(membership(B, b, {0.3, 3.0}), Membership::On);
    EXPECT_EQ(membership(B, b, {-1.5, 3.5}), Membership::On);
    EXPECT_EQ(membership(B, b, {0.7, -2.0}), Membership::On);
    EXPECT_NE(membership(B, b, {0.5, 0.2}), Membership::On);
    // A diagonal pair has a thin bisector only.
    const Bisector d{{-1, -1}, {1, 1}};
    EXPECT_NE(membership(B, d, {0.3, 3.0}), Membership::On);
}

TEST(Loci, KindNames) {
    EXPECT_EQ(kind_name(EllipseFoci{{-1, 0}, {1, 0}, 2}), "ellipse_foci");
    EXPECT_EQ(kind_name(DSegment{{-1, 0}, {1, 0}}), "d_segment");
}
