#include <gtest/gtest.h>

#include "minkconic/minkconic.hpp"
#include "oracles.hpp"

using namespace mink;

TEST(Roots, BisectAndScan) {
    const double r = bisect([](double t) { return t * t - 2; }, 0, 2, 1e-14);
    EXPECT_NEAR(r, std::sqrt(2.0), 1e-14);
    ScanOptions opt;
    opt.stations = 200;
    const auto hits = scan_roots([](double t) { return std::sin(t); }, 0.5, 10, opt);
    ASSERT_EQ(hits.size(), 3u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(hits[k].lo, (k + 1) * std::numbers::pi, 1e-9);
    // A plateau of zeros becomes one interval.
    const auto band = scan_roots([](double t) { return t < 1 ? t - 1 : (t > 2 ? t - 2 : 0.0); }, 0, 3, opt);
    ASSERT_EQ(band.size(), 1u);
    EXPECT_TRUE(band[0].is_interval());
    EXPECT_NEAR(band[0].lo, 1.0, 1e-9);
    EXPECT_NEAR(band[0].hi, 2.0, 1e-9);
}

TEST(RadialTrace, EuclideanEllipseMatchesClosedForm) {
    const PolyCurve c = radial_trace(UnitBall::euclidean(), EllipseFoci{{-3, 0}, {3, 0}, 5}, {0, 0}, 720);
    ASSERT_EQ(c.points.size(), 720u);
    EXPECT_TRUE(c.closed);
    for (Vec2 z : c.points) EXPECT_NEAR(oracle::ellipse_implicit(z, 5, 3), 0.0, 1e-9);
}

TEST(RadialTrace, PointsSatisfyResidualForEveryBall) {
    for (const UnitBall& B : {UnitBall::lp(1.5), UnitBall::lp(1.0), UnitBall::lp_infinity(), random_symmetric_polygon(4, 5)}) {
        const EllipseFoci e{{-0.7, 0.2}, {0.9, -0.4}, 2.0};
        const PolyCurve c = radial_trace(B, e, {0.1, -0.1}, 360);
        for (Vec2 z : c.points) EXPECT_LE(std::abs(residual(B, e, z)), c.residual_tol);
        EXPECT_TRUE(convexity_check(c).convex);
    }
}

TEST(RadialTrace, RejectsUnboundedLoci) {
    EXPECT_THROW(radial_trace(UnitBall::euclidean(), HyperbolaFoci{{-2, 0}, {2, 0}, 1}, {0, 0}, 10), InvalidInput);
    EXPECT_THROW(radial_trace(UnitBall::euclidean(), EllipseFoci{{-2, 0}, {2, 0}, 1}, {0, 0}, 10), InvalidInput);
}

TEST(SweepTrace, EuclideanHyperbolaHasTwoBranches) {
    const TraceReport t = sweep_trace_hyperbola_foci(UnitBall::euclidean(), HyperbolaFoci{{-2, 0}, {2, 0}, 1});
    ASSERT_EQ(t.curves.size(), 2u);
    for (const auto& c : t.curves) {
        EXPECT_FALSE(c.closed);
        for (Vec2 z : c.points) EXPECT_NEAR(oracle::hyperbola_implicit(z, 1, 2), 0.0, 1e-8 * (1 + z.x * z.x));
    }
    // Curve 0 is the branch near f1.
    EXPECT_LT(t.curves[0].points.front().x, 0);
    EXPECT_GT(t.curves[1].points.front().x, 0);
    for (const auto& lc : t.lines) EXPECT_EQ(lc.total(), 2);
    EXPECT_TRUE(t.segments.empty());
}

TEST(SweepTrace, EuclideanParabola) {
    const TraceReport t = sweep_trace_leading_line(UnitBall::euclidean(), LeadingLineConic{{0, 1}, Line::horizontal(0), 1.0});
    ASSERT_EQ(t.curves.size(), 1u);
    for (Vec2 z : t.curves[0].points) EXPECT_NEAR(z.y, (z.x * z.x + 1) / 2, 1e-8 * (1 + z.y));
}

TEST(SweepTrace, LeadingLineHyperbolaTwoBranches) {
    // gamma = 1/2 (eccentricity 2): the Euclidean hyperbola has both branches.
    const TraceReport t = sweep_trace_leading_line(UnitBall::euclidean(), LeadingLineConic{{1, 0}, Line::vertical(0), 0.5});
    EXPECT_EQ(t.curves.size(), 2u);
    for (const auto& lc : t.lines) EXPECT_LE(lc.total(), 2);
}

TEST(SweepTrace, LinfParabolaHasStraightPieces) {
    const TraceReport t = sweep_trace_leading_line(UnitBall::lp_infinity(), LeadingLineConic{{0, 0}, diagonal_line(), 1.0});
    ASSERT_EQ(t.curves.size(), 1u);
    EXPECT_GE(t.segments.size(), 1u);
}

TEST(Segments, DetectsSquareEdges) {
    PolyCurve sq;
    sq.closed = true;
    for (int side = 0; side < 4; ++side) {
        const Vec2 a = unit_at_angle(std::numbers::pi / 4 + side * std::numbers::pi / 2) * std::sqrt(2.0);
        const Vec2 b = unit_at_angle(std::numbers::pi / 4 + (side + 1) * std::numbers::pi / 2) * std::sqrt(2.0);
        for (int i = 0; i < 10; ++i) sq.points.push_back(a + (b - a) * (i / 10.0));
    }
    EXPECT_EQ(detect_segments(sq).size(), 4u);
    PolyCurve circle;
    circle.closed = true;
    for (int i = 0; i < 720; ++i) circle.points.push_back(unit_at_angle(i * 2 * std::numbers::pi / 720));
    EXPECT_TRUE(detect_segments(circle).empty());
}

TEST(Convexity, FlagsReflexVertex) {
    PolyCurve c;
    c.closed = true;
    c.points = {{0, 0}, {2, 0}, {2, 2}, {1, 0.5}, {0, 2}};
    const auto r = convexity_check(c);
    EXPECT_FALSE(r.convex);
    EXPECT_EQ(r.witness, 3);
    PolyCurve open;
    open.points = {{0, 0}, {1, 0}};
    EXPECT_THROW(convexity_check(open), InvalidInput);
}

TEST(Hausdorff, AgainstOracle) {
    PolyCurve a, b;
    a.closed = b.closed = true;
    for (int i = 0; i < 64; ++i) {
        a.points.push_back(unit_at_angle(i * 2 * std::numbers::pi / 64));
        b.points.push_back(unit_at_angle(i * 2 * std::numbers::pi / 64 + 0.03) * 1.1);
    }
    double ref = 0;
    for (Vec2 p : a.points) ref = std::max(ref, oracle::polyline_distance(p, b.points, true));
    for (Vec2 p : b.points) ref = std::max(ref, oracle::polyline_distance(p, a.points, true));
    EXPECT_NEAR(hausdorff_distance(a, b), ref, 1e-14);
    EXPECT_EQ(hausdorff_distance(a, a), 0.0);
}

TEST(RegionGrid, EuclideanBisectorIsALine) {
    const RegionGrid g = region_grid(UnitBall::euclidean(), Bisector{{-1, 0}, {1, 0}}, {-2, 2, -2, 2}, 64, 64);
    // Cells touching x = 0 only: one column (the crossing rule marks the left one).
    for (int iy = 0; iy < 64; ++iy) {
        for (int ix = 0; ix < 64; ++ix) {
            const bool on = g.at(ix, iy) == Membership::On;
            EXPECT_EQ(on, ix == 31) << ix << "," << iy;
        }
    }
}

TEST(RegionGrid, LinfBisectorHasArea) {
    const RegionGrid g = region_grid(UnitBall::lp_infinity(), Bisector{{-1, 0}, {1, 0}}, {-4, 4, -4, 4}, 128, 128);
    // Two regions |z2| >= |z1| + 1 inside the box: 2 * 9 / 64 of the area.
    EXPECT_NEAR(g.fraction(Membership::On), 18.0 / 64.0, 0.02);
}

TEST(TraceSpec, Dispatch) {
    const UnitBall E = UnitBall::euclidean();
    TraceParams p;
    EXPECT_EQ(trace_spec(E, EllipseFoci{{-1, 0}, {1, 0}, 2}, p).curves.size(), 1u);
    EXPECT_EQ(trace_spec(E, HyperbolaLeadingCircle{2, {3, 0}}, p).curves.size(), 2u);
    const TraceReport d = trace_spec(E, DSegment{{-1, 0}, {1, 0}}, p);
    EXPECT_TRUE(d.region.has_value());
    EXPECT_EQ(d.degeneracy, Degeneracy::DSegmentSet);
    EXPECT_THROW(trace_spec(E, EllipseFoci{{-3, 0}, {3, 0}, 2}, p), InvalidInput);
    try {
        trace_spec(E, EllipseFoci{{-3, 0}, {3, 0}, 2}, p);
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("empty locus"), std::string::npos);
    }
}

TEST(Asymptotes, EuclideanHyperbolaLines) {
    // Leading circle R = 2 centred at 0, focus (4, 0): foci 0 and (4, 0), a = 1,
    // c = 2; asymptote slopes +-sqrt(3) through the centre (2, 0).
    const AsymptoteSet s = asymptote_candidates(UnitBall::euclidean(), HyperbolaLeadingCircle{2, {4, 0}});
    ASSERT_EQ(s.items.size(), 2u);
    for (const auto& it : s.items) {
        EXPECT_EQ(it.kind, AsymptoteItem::Kind::Line);
        EXPECT_NEAR(std::abs(it.line.direction.y / it.line.direction.x), std::sqrt(3.0), 1e-6);
        EXPECT_NEAR(it.line.signed_euclid_distance({2, 0}), 0.0, 1e-9);
    }
}

TEST(Asymptotes, SquareGivesCones) {
    // The tangent y = 1 from (3, 1) contains the top edge of the square.
    const AsymptoteSet s = asymptote_candidates(UnitBall::lp_infinity(), HyperbolaLeadingCircle{1, {3, 1}});
    int cones = 0;
    for (const auto& it : s.items) cones += it.kind == AsymptoteItem::Kind::Cone;
    EXPECT_EQ(cones, 1);
    // From (3, 0.5) both tangents touch vertices.
    for (const auto& it : asymptote_candidates(UnitBall::lp_infinity(), HyperbolaLeadingCircle{1, {3, 0.5}}).items) {
        EXPECT_EQ(it.kind, AsymptoteItem::Kind::Line);
    }
}
