#include <gtest/gtest.h>

#include "minkconic/minkconic.hpp"

using namespace mink;

namespace {

Scene sample_scene() {
    Scene s;
    s.ball = UnitBall::lp(1.5);
    s.specs = {EllipseFoci{{-3, 0}, {3, 0}, 5},
               EllipseLeadingCircle{4, {0.1, 0.2}},
               HyperbolaFoci{{-2, 0}, {2, 0}, 0.7},
               HyperbolaLeadingCircle{1, {3, 0.25}},
               LeadingLineConic{{0, 1}, Line({0, 0}, {1, 0.1}), 0.3},
               Bisector{{-1, 0}, {1, 0.5}},
               DSegment{{-1, 0}, {1, 0.1}}};
    s.trace = {360, 8.5, 1e-12, 101};
    s.bbox = {-5, 5, -4, 4};
    s.outputs = {{"csv", "a.csv"}, {"svg", "b.svg"}};
    return s;
}

std::string error_of(const std::string& text) {
    try {
        scene_from_json(parse_json_text(text, "scene.json"));
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(SceneJson, RoundTrip) {
    const Scene s = sample_scene();
    const Json j = scene_to_json(s);
    EXPECT_EQ(scene_from_json(parse_json_text(j.dump(), "x")), s);
    for (const UnitBall& B : {UnitBall::lp_infinity(), random_symmetric_polygon(4, 3), UnitBall::lp(1.0)}) {
        Scene t = s;
        t.ball = B;
        t.specs = {EllipseFoci{{-3, 0}, {3, 0}, 5}};
        EXPECT_EQ(scene_from_json(parse_json_text(scene_to_json(t).dump(2), "x")), t);
    }
}

TEST(SceneJson, Defaults) {
    const Scene s = scene_from_json(parse_json_text(R"({"ball":{"type":"lp","p":2},"specs":[]})", "x"));
    EXPECT_EQ(s.trace, TraceSettings{});
    EXPECT_TRUE(s.ball.is_lp());
    EXPECT_EQ(s.ball.p(), 2.0);
}

TEST(SceneJson, DiagnosticsNameTheField) {
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":2},"specs":[{"kind":"ellipse_foci","f1":[0,0],"a":1}]})")
                  .find("scene.specs[0].f2: missing field"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":"two"},"specs":[]})").find("scene.ball.p"), std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":0.5},"specs":[]})").find("scene.ball"), std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"blob"},"specs":[]})").find("unknown ball type"), std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":2},"specs":[{"kind":"spiral"}]})").find("unknown conic kind"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":2},"specs":[{"kind":"bisector","x":[0,0],"y":[0,0]}]})")
                  .find("scene.specs[0]"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":2},"specs":[]},)").find("scene.json"), std::string::npos);
    EXPECT_NE(error_of(R"({"ball":{"type":"lp","p":2},"specs":[],"trace":{"n":1}})").find("scene.trace.n"),
              std::string::npos);
}

TEST(BallDescriptor, Parses) {
    EXPECT_EQ(parse_ball_descriptor("lp:2").p(), 2.0);
    EXPECT_TRUE(parse_ball_descriptor("lp:inf").is_lp_infinity());
    EXPECT_EQ(parse_ball_descriptor("regular:6").vertices().size(), 6u);
    EXPECT_EQ(parse_ball_descriptor("octagon:7").vertices(), random_symmetric_polygon(4, 7).vertices());
    EXPECT_EQ(parse_ball_descriptor("polygon:1,0;0,1;-1,0;0,-1").vertices().size(), 4u);
    EXPECT_THROW(parse_ball_descriptor("lp"), InvalidInput);
    EXPECT_THROW(parse_ball_descriptor("lp:x"), InvalidInput);
    EXPECT_THROW(parse_ball_descriptor("disk:1"), InvalidInput);
}

TEST(Output, CsvFormat) {
    Scene s;
    s.specs = {EllipseFoci{{-3, 0}, {3, 0}, 5}, HyperbolaFoci{{-2, 0}, {2, 0}, 1}};
    s.trace.n = 8;
    s.trace.n_lines = 5;
    const auto traces = trace_scene(s);
    const std::string csv = curves_to_csv(traces);
    // Three curves: two blank separator lines, 8 + 2 * 5 point rows.
    int blank = 0, rows = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) ++blank;
        else {
            ++rows;
            double x, y;
            char comma;
            std::istringstream ls(line);
            ASSERT_TRUE(ls >> x >> comma >> y);
            EXPECT_EQ(comma, ',');
        }
    }
    EXPECT_EQ(blank, 2);
    EXPECT_EQ(rows, 18);
    // Full precision: parsed coordinates are the traced doubles.
    const std::string first = csv.substr(0, csv.find(','));
    EXPECT_EQ(std::stod(first), traces[0].report.curves[0].points[0].x);
}

TEST(Output, PgmLayout) {
    RegionGrid g;
    g.nx = 3;
    g.ny = 2;
    g.cells = {Membership::On, Membership::Interior, Membership::Exterior,
               Membership::Exterior, Membership::Exterior, Membership::On};
    // Top row first (row 1 of the grid).
    EXPECT_EQ(grid_to_pgm(g), "P2\n3 2\n255\n255 255 0\n0 128 255\n");
}

TEST(Output, SvgIsDeterministicAndLayered) {
    Scene s = sample_scene();
    s.trace = {};
    const auto t1 = trace_scene(s);
    const auto t2 = trace_scene(s);
    const std::string a = emit_svg(s, t1), b = emit_svg(s, t2);
    EXPECT_EQ(a, b);
    for (const char* layer : {"unit-circle", "leading", "regions", "curves", "segments", "asymptotes", "foci"}) {
        EXPECT_NE(a.find(std::string("id=\"") + layer + "\""), std::string::npos) << layer;
    }
    EXPECT_EQ(a.rfind("</svg>\n"), a.size() - 7);
}

TEST(Output, ReportJson) {
    const auto rs = run_claim("thm2", UnitBall::euclidean(), 1);
    const Json j = reports_to_json(rs);
    ASSERT_EQ(j.size(), rs.size());
    EXPECT_EQ(j[0]["id"], "thm2");
    EXPECT_TRUE(j[0]["pass"].get<bool>());
    EXPECT_TRUE(j[0]["metrics"].contains("i_agreement"));
}

TEST(Output, SipJson) {
    const Json j = sip_to_json(summarize_sip(2.0, LinearMap2::diag(1, -1)));
    EXPECT_TRUE(j["self_adjoint"].get<bool>());
    ASSERT_EQ(j["zero_directions"].size(), 2u);
    EXPECT_NEAR(j["zero_directions"][0]["angle_deg"].get<double>(), 45.0, 1e-6);
    EXPECT_NEAR(j["zero_directions"][1]["angle_deg"].get<double>(), 135.0, 1e-6);
    EXPECT_FALSE(j["adjoint_nonlinearity_witness"]["nonlinear"].get<bool>());
}
