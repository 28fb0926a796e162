#pragma once

// Scene files, ball descriptors and the output formats: JSON scenes and
// reports, CSV curves, SVG figures, PGM grids. Text output is deterministic
// for identical inputs.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "minkconic/error.hpp"
#include "minkconic/loci.hpp"
#include "minkconic/sip.hpp"
#include "minkconic/trace.hpp"
#include "minkconic/unit_ball.hpp"
#include "minkconic/verify.hpp"

namespace mink {

using Json = nlohmann::json;

struct OutputSpec {
    std::string format;
    std::string path;
    bool operator==(const OutputSpec&) const = default;
};

struct TraceSettings {
    int n = 720;
    double extent = 0.0;
    double tol = kRootTol;
    int n_lines = 257;
    bool operator==(const TraceSettings&) const = default;
};

struct Scene {
    UnitBall ball = UnitBall::euclidean();
    std::vector<ConicSpec> specs;
    TraceSettings trace;
    BBox bbox{-6, 6, -6, 6};
    std::vector<OutputSpec> outputs;
};

inline bool same_ball(const UnitBall& a, const UnitBall& b) {
    if (a.kind() != b.kind() || a.is_lp_infinity() != b.is_lp_infinity()) return false;
    if (a.is_lp() && !a.is_lp_infinity()) return a.p() == b.p();
    return a.vertices() == b.vertices();
}

inline bool operator==(const BBox& a, const BBox& b) {
    return a.xmin == b.xmin && a.xmax == b.xmax && a.ymin == b.ymin && a.ymax == b.ymax;
}

inline bool operator==(const Scene& a, const Scene& b) {
    return same_ball(a.ball, b.ball) && a.specs == b.specs && a.trace == b.trace && a.bbox == b.bbox &&
           a.outputs == b.outputs;
}

/// %.17g: enough digits to round-trip any double.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// JSON reading with field paths in diagnostics

namespace detail {

[[noreturn]] inline void field_error(const std::string& path, const std::string& what) {
    throw InvalidInput(path + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) field_error(path + "." + key, "missing field");
    return *it;
}

inline double number(const Json& j, const std::string& path) {
    if (!j.is_number()) field_error(path, "expected a number");
    return j.get<double>();
}

inline int integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) field_error(path, "expected an integer");
    return j.get<int>();
}

inline Vec2 vec(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) field_error(path, "expected [x, y]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

inline double num_field(const Json& j, const std::string& key, const std::string& path) {
    return number(field(j, key, path), path + "." + key);
}

inline Vec2 vec_field(const Json& j, const std::string& key, const std::string& path) {
    return vec(field(j, key, path), path + "." + key);
}

inline Json vec_json(Vec2 v) { return Json::array({v.x, v.y}); }

}  // namespace detail

inline UnitBall ball_from_json(const Json& j, const std::string& path = "ball") {
    const Json& type = detail::field(j, "type", path);
    if (!type.is_string()) detail::field_error(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    try {
        if (t == "lp") {
            const Json& p = detail::field(j, "p", path);
            if (p.is_string() && (p.get<std::string>() == "inf" || p.get<std::string>() == "infinity")) {
                return UnitBall::lp_infinity();
            }
            return UnitBall::lp(detail::number(p, path + ".p"));
        }
        if (t == "polygon") {
            const Json& vs = detail::field(j, "vertices", path);
            if (!vs.is_array()) detail::field_error(path + ".vertices", "expected an array");
            std::vector<Vec2> v;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                v.push_back(detail::vec(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
            }
            return UnitBall::polygon(v);
        }
    } catch (const InvalidInput& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        detail::field_error(path, msg);
    }
    detail::field_error(path + ".type", "unknown ball type '" + t + "'");
}

inline Json ball_to_json(const UnitBall& B) {
    if (B.is_lp_infinity()) return {{"type", "lp"}, {"p", "inf"}};
    if (B.is_lp()) return {{"type", "lp"}, {"p", B.p()}};
    Json v = Json::array();
    for (const Vec2& p : B.vertices()) v.push_back(detail::vec_json(p));
    return {{"type", "polygon"}, {"vertices", v}};
}

inline Line line_from_json(const Json& j, const std::string& path) {
    try {
        return Line(detail::vec_field(j, "point", path), detail::vec_field(j, "direction", path));
    } catch (const InvalidInput& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        detail::field_error(path, msg);
    }
}

inline ConicSpec spec_from_json(const Json& j, const std::string& path = "spec") {
    using namespace detail;
    const Json& kind = field(j, "kind", path);
    if (!kind.is_string()) field_error(path + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "ellipse_foci") return EllipseFoci{vec_field(j, "f1", path), vec_field(j, "f2", path), num_field(j, "a", path)};
    if (k == "hyperbola_foci") {
        return HyperbolaFoci{vec_field(j, "f1", path), vec_field(j, "f2", path), num_field(j, "a", path)};
    }
    if (k == "ellipse_leading_circle") return EllipseLeadingCircle{num_field(j, "R", path), vec_field(j, "focus", path)};
    if (k == "hyperbola_leading_circle") {
        return HyperbolaLeadingCircle{num_field(j, "R", path), vec_field(j, "focus", path)};
    }
    if (k == "leading_line") {
        return LeadingLineConic{vec_field(j, "focus", path), line_from_json(field(j, "line", path), path + ".line"),
                                num_field(j, "gamma", path)};
    }
    if (k == "bisector") return Bisector{vec_field(j, "x", path), vec_field(j, "y", path)};
    if (k == "d_segment") return DSegment{vec_field(j, "x", path), vec_field(j, "y", path)};
    field_error(path + ".kind", "unknown conic kind '" + k + "'");
}

inline Json spec_to_json(const ConicSpec& spec) {
    using detail::vec_json;
    return std::visit(
        Overloaded{
            [](const EllipseFoci& s) -> Json {
                return {{"kind", "ellipse_foci"}, {"f1", vec_json(s.f1)}, {"f2", vec_json(s.f2)}, {"a", s.a}};
            },
            [](const HyperbolaFoci& s) -> Json {
                return {{"kind", "hyperbola_foci"}, {"f1", vec_json(s.f1)}, {"f2", vec_json(s.f2)}, {"a", s.a}};
            },
            [](const EllipseLeadingCircle& s) -> Json {
                return {{"kind", "ellipse_leading_circle"}, {"R", s.R}, {"focus", vec_json(s.focus)}};
            },
            [](const HyperbolaLeadingCircle& s) -> Json {
                return {{"kind", "hyperbola_leading_circle"}, {"R", s.R}, {"focus", vec_json(s.focus)}};
            },
            [](const LeadingLineConic& s) -> Json {
                return {{"kind", "leading_line"},
                        {"focus", vec_json(s.focus)},
                        {"line", {{"point", vec_json(s.line.point)}, {"direction", vec_json(s.line.direction)}}},
                        {"gamma", s.gamma}};
            },
            [](const Bisector& s) -> Json { return {{"kind", "bisector"}, {"x", vec_json(s.x)}, {"y", vec_json(s.y)}}; },
            [](const DSegment& s) -> Json { return {{"kind", "d_segment"}, {"x", vec_json(s.x)}, {"y", vec_json(s.y)}}; },
        },
        spec);
}

/// Parses and validates a scene; every spec must be valid under the ball.
inline Scene scene_from_json(const Json& j) {
    using namespace detail;
    if (!j.is_object()) field_error("scene", "expected an object");
    Scene s;
    s.ball = ball_from_json(field(j, "ball", "scene"), "scene.ball");
    const Json& specs = field(j, "specs", "scene");
    if (!specs.is_array()) field_error("scene.specs", "expected an array");
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const std::string path = "scene.specs[" + std::to_string(i) + "]";
        ConicSpec spec = spec_from_json(specs[i], path);
        try {
            validate(s.ball, spec);
        } catch (const InvalidInput& e) {
            field_error(path, e.what());
        }
        s.specs.push_back(spec);
    }
    if (auto it = j.find("trace"); it != j.end()) {
        const Json& t = *it;
        if (!t.is_object()) field_error("scene.trace", "expected an object");
        if (t.contains("n")) s.trace.n = integer(t["n"], "scene.trace.n");
        if (t.contains("extent")) s.trace.extent = number(t["extent"], "scene.trace.extent");
        if (t.contains("tol")) s.trace.tol = number(t["tol"], "scene.trace.tol");
        if (t.contains("n_lines")) s.trace.n_lines = integer(t["n_lines"], "scene.trace.n_lines");
        if (s.trace.n < 3) field_error("scene.trace.n", "must be at least 3");
        if (s.trace.n_lines < 2) field_error("scene.trace.n_lines", "must be at least 2");
        if (!(s.trace.tol > 0.0)) field_error("scene.trace.tol", "must be positive");
        if (!(s.trace.extent >= 0.0)) field_error("scene.trace.extent", "must be nonnegative");
    }
    if (auto it = j.find("bbox"); it != j.end()) {
        const Json& b = *it;
        s.bbox = {num_field(b, "xmin", "scene.bbox"), num_field(b, "xmax", "scene.bbox"),
                  num_field(b, "ymin", "scene.bbox"), num_field(b, "ymax", "scene.bbox")};
        if (s.bbox.empty()) field_error("scene.bbox", "bounding box is empty");
    }
    if (auto it = j.find("outputs"); it != j.end()) {
        if (!it->is_array()) field_error("scene.outputs", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "scene.outputs[" + std::to_string(i) + "]";
            const Json& o = (*it)[i];
            const Json& f = field(o, "format", path);
            const Json& p = field(o, "path", path);
            if (!f.is_string() || !p.is_string()) field_error(path, "format and path must be strings");
            const std::string fmt = f.get<std::string>();
            if (fmt != "csv" && fmt != "svg" && fmt != "pgm") field_error(path + ".format", "unknown format '" + fmt + "'");
            s.outputs.push_back({fmt, p.get<std::string>()});
        }
    }
    return s;
}

inline Json scene_to_json(const Scene& s) {
    Json specs = Json::array();
    for (const ConicSpec& c : s.specs) specs.push_back(spec_to_json(c));
    Json outs = Json::array();
    for (const OutputSpec& o : s.outputs) outs.push_back({{"format", o.format}, {"path", o.path}});
    return {{"ball", ball_to_json(s.ball)},
            {"specs", specs},
            {"trace", {{"n", s.trace.n}, {"extent", s.trace.extent}, {"tol", s.trace.tol}, {"n_lines", s.trace.n_lines}}},
            {"bbox", {{"xmin", s.bbox.xmin}, {"xmax", s.bbox.xmax}, {"ymin", s.bbox.ymin}, {"ymax", s.bbox.ymax}}},
            {"outputs", outs}};
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(source + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << content;
    if (!out) throw InvalidInput("write failed for '" + path + "'");
}

inline Scene load_scene(const std::string& path) { return scene_from_json(parse_json_text(read_file(path), path)); }

// ---------------------------------------------------------------------------
// Ball descriptors: lp:<p>, lp:inf, polygon:x,y;x,y;..., regular:<n>,
// octagon:<seed> (random symmetric octagon).

inline UnitBall parse_ball_descriptor(const std::string& desc) {
    const auto colon = desc.find(':');
    if (colon == std::string::npos) throw InvalidInput("ball descriptor '" + desc + "' lacks a ':'");
    const std::string head = desc.substr(0, colon);
    const std::string tail = desc.substr(colon + 1);
    auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidInput("ball descriptor '" + desc + "': bad number '" + s + "'");
        return v;
    };
    if (head == "lp") {
        if (tail == "inf" || tail == "infinity") return UnitBall::lp_infinity();
        return UnitBall::lp(to_double(tail));
    }
    if (head == "regular") return UnitBall::regular_polygon(static_cast<int>(to_double(tail)));
    if (head == "octagon") return random_symmetric_polygon(4, static_cast<std::uint64_t>(to_double(tail)));
    if (head == "polygon") {
        std::vector<Vec2> v;
        std::stringstream ss(tail);
        std::string item;
        while (std::getline(ss, item, ';')) {
            const auto comma = item.find(',');
            if (comma == std::string::npos) throw InvalidInput("ball descriptor '" + desc + "': vertex needs x,y");
            v.push_back({to_double(item.substr(0, comma)), to_double(item.substr(comma + 1))});
        }
        return UnitBall::polygon(v);
    }
    throw InvalidInput("unknown ball descriptor '" + desc + "'");
}

// ---------------------------------------------------------------------------
// Reports

inline Json report_to_json(const ClaimReport& r) {
    Json w = Json::array();
    for (const Vec2& p : r.witnesses) w.push_back(detail::vec_json(p));
    return {{"id", r.id},         {"ball", r.ball},     {"params", r.params}, {"pass", r.pass},
            {"metrics", r.metrics}, {"thresholds", r.thresholds}, {"witnesses", w}, {"notes", r.notes}};
}

inline Json reports_to_json(const std::vector<ClaimReport>& rs) {
    Json a = Json::array();
    for (const ClaimReport& r : rs) a.push_back(report_to_json(r));
    return a;
}

struct SipSummary {
    double p = 2.0;
    LinearMap2 A;
    bool self_adjoint = false;
    double self_adjoint_defect = 0.0;
    ConicZeros zeros;
    NonlinearityWitness witness;
};

inline SipSummary summarize_sip(double p, const LinearMap2& A, std::uint64_t seed = 0x5eedULL) {
    const SipSpace S = SipSpace::lp(p);
    SipSummary s;
    s.p = p;
    s.A = A;
    s.self_adjoint_defect = self_adjoint_defect(S, A, 256, seed);
    s.self_adjoint = is_self_adjoint(S, A, 256, 1e-9, seed);
    s.zeros = projective_conic_zeros(S, A);
    s.witness = adjoint_nonlinearity_witness(S, A, 2000, seed);
    return s;
}

inline Json sip_to_json(const SipSummary& s) {
    Json dirs = Json::array();
    for (double t : s.zeros.angles) {
        dirs.push_back({{"angle_rad", t}, {"angle_deg", t * 180.0 / std::numbers::pi},
                        {"direction", detail::vec_json(unit_at_angle(t))}});
    }
    Json arcs = Json::array();
    for (auto [a, b] : s.zeros.arcs) arcs.push_back(Json::array({a, b}));
    return {{"p", s.p},
            {"matrix", Json::array({Json::array({s.A.a, s.A.b}), Json::array({s.A.c, s.A.d})})},
            {"self_adjoint", s.self_adjoint},
            {"self_adjoint_defect", s.self_adjoint_defect},
            {"zero_directions", dirs},
            {"zero_arcs", arcs},
            {"adjoint_nonlinearity_witness",
             {{"y1", detail::vec_json(s.witness.y1)},
              {"y2", detail::vec_json(s.witness.y2)},
              {"defect", s.witness.defect},
              {"nonlinear", s.witness.defect > 1e-3}}}};
}

// ---------------------------------------------------------------------------
// Traces of a scene

struct SpecTrace {
    ConicSpec spec;
    TraceReport report;
    std::optional<AsymptoteSet> asymptotes;
};

inline TraceParams trace_params(const Scene& s, int grid_resolution = 256) {
    TraceParams p;
    p.n = s.trace.n;
    p.extent = s.trace.extent;
    p.tol = s.trace.tol;
    p.n_lines = s.trace.n_lines;
    p.bbox = s.bbox;
    p.grid_resolution = grid_resolution;
    return p;
}

inline std::vector<SpecTrace> trace_scene(const Scene& s) {
    std::vector<SpecTrace> out;
    const TraceParams p = trace_params(s);
    for (const ConicSpec& spec : s.specs) {
        SpecTrace t{spec, trace_spec(s.ball, spec, p), std::nullopt};
        if (const auto* h = std::get_if<HyperbolaLeadingCircle>(&spec)) t.asymptotes = asymptote_candidates(s.ball, *h);
        out.push_back(std::move(t));
    }
    return out;
}

/// One "x,y" row per point, a blank line between curves.
inline std::string curves_to_csv(const std::vector<SpecTrace>& traces) {
    std::string out;
    bool first = true;
    for (const SpecTrace& t : traces) {
        for (const PolyCurve& c : t.report.curves) {
            if (!first) out += "\n";
            first = false;
            for (const Vec2& p : c.points) out += fmt17(p.x) + "," + fmt17(p.y) + "\n";
        }
    }
    return out;
}

/// PGM P2, top row at ymax: On 0, Interior 128, Exterior 255.
inline std::string grid_to_pgm(const RegionGrid& g) {
    std::string out = "P2\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    for (int iy = g.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const Membership m = g.at(ix, iy);
            out += m == Membership::On ? "0" : m == Membership::Interior ? "128" : "255";
            out += ix + 1 < g.nx ? " " : "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

class SvgWriter {
public:
    SvgWriter(const BBox& box, double width) : box_(box), scale_(width / (box.xmax - box.xmin)) {
        width_ = width;
        height_ = (box.ymax - box.ymin) * scale_;
    }

    std::string num(double v) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return buf;
    }
    std::string X(double x) const { return num((x - box_.xmin) * scale_); }
    std::string Y(double y) const { return num((box_.ymax - y) * scale_); }

    void open_layer(const std::string& id) { body_ += "<g id=\"" + id + "\">\n"; }
    void close_layer() { body_ += "</g>\n"; }

    void polyline(const std::vector<Vec2>& pts, bool closed, const std::string& style) {
        if (pts.empty()) return;
        body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += ' ';
            body_ += X(pts[i].x) + "," + Y(pts[i].y);
        }
        body_ += "\" style=\"" + style + "\"/>\n";
    }
    void segment(Vec2 a, Vec2 b, const std::string& style) {
        body_ += "<line x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) + "\" y2=\"" + Y(b.y) +
                 "\" style=\"" + style + "\"/>\n";
    }
    void marker(Vec2 p, const std::string& fill) {
        body_ += "<circle cx=\"" + X(p.x) + "\" cy=\"" + Y(p.y) + "\" r=\"3.5\" style=\"fill:" + fill + "\"/>\n";
    }
    void rect(double x0, double y0, double x1, double y1, const std::string& style) {
        body_ += "<rect x=\"" + X(x0) + "\" y=\"" + Y(y1) + "\" width=\"" + num((x1 - x0) * scale_) +
                 "\" height=\"" + num((y1 - y0) * scale_) + "\" style=\"" + style + "\"/>\n";
    }

    std::string finish() const {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " +
               num(height_) + "\">\n<rect width=\"100%\" height=\"100%\" style=\"fill:white\"/>\n" + body_ +
               "</svg>\n";
    }

    const BBox& box() const { return box_; }

private:
    BBox box_;
    double scale_;
    double width_ = 0;
    double height_ = 0;
    std::string body_;
};

inline std::vector<Vec2> ball_outline(const UnitBall& B, Vec2 center, double r) {
    std::vector<Vec2> pts;
    if (B.has_polygon()) {
        for (const Vec2& v : B.vertices()) pts.push_back(center + v * r);
        return pts;
    }
    for (int i = 0; i < 256; ++i) pts.push_back(center + B.boundary_point(unit_at_angle(2.0 * std::numbers::pi * i / 256)) * r);
    return pts;
}

/// Portion of the line inside the box (empty when it misses).
inline std::optional<std::pair<Vec2, Vec2>> clip_line(const Line& l, const BBox& b, double t_min = -1e300) {
    const Vec2 d = euclid_unit(l.direction);
    double lo = t_min, hi = 1e300;
    auto slab = [&](double p, double dv, double mn, double mx) {
        if (dv == 0.0) return p >= mn && p <= mx;
        double t0 = (mn - p) / dv, t1 = (mx - p) / dv;
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        return lo <= hi;
    };
    if (!slab(l.point.x, d.x, b.xmin, b.xmax) || !slab(l.point.y, d.y, b.ymin, b.ymax)) return std::nullopt;
    return std::make_pair(l.point + d * lo, l.point + d * hi);
}

}  // namespace detail

/// Layers: unit circle, leading circles and lines, foci, region grids,
/// traced curves, detected segments, asymptotes.
inline std::string emit_svg(const Scene& scene, const std::vector<SpecTrace>& traces, double width = 800.0) {
    detail::SvgWriter w(scene.bbox, width);
    const UnitBall& B = scene.ball;

    w.open_layer("unit-circle");
    w.polyline(detail::ball_outline(B, {0.0, 0.0}, 1.0), true, "fill:none;stroke:#999999;stroke-width:1");
    w.close_layer();

    w.open_layer("leading");
    for (const SpecTrace& t : traces) {
        const std::string st = "fill:none;stroke:#3366cc;stroke-width:1;stroke-dasharray:4,3";
        if (const auto* e = std::get_if<EllipseLeadingCircle>(&t.spec)) w.polyline(detail::ball_outline(B, {0, 0}, e->R), true, st);
        if (const auto* h = std::get_if<HyperbolaLeadingCircle>(&t.spec)) w.polyline(detail::ball_outline(B, {0, 0}, h->R), true, st);
        if (const auto* l = std::get_if<LeadingLineConic>(&t.spec)) {
            if (auto seg = detail::clip_line(l->line, w.box())) w.segment(seg->first, seg->second, st);
        }
    }
    w.close_layer();

    w.open_layer("regions");
    for (const SpecTrace& t : traces) {
        if (!t.report.region) continue;
        const RegionGrid& g = *t.report.region;
        const double dx = (g.bbox.xmax - g.bbox.xmin) / g.nx;
        const double dy = (g.bbox.ymax - g.bbox.ymin) / g.ny;
        for (int iy = 0; iy < g.ny; ++iy) {
            int ix = 0;
            while (ix < g.nx) {
                if (g.at(ix, iy) != Membership::On) {
                    ++ix;
                    continue;
                }
                int run = ix;
                while (run + 1 < g.nx && g.at(run + 1, iy) == Membership::On) ++run;
                w.rect(g.bbox.xmin + ix * dx, g.bbox.ymin + iy * dy, g.bbox.xmin + (run + 1) * dx,
                       g.bbox.ymin + (iy + 1) * dy, "fill:#f4a261;stroke:none");
                ix = run + 1;
            }
        }
    }
    w.close_layer();

    w.open_layer("curves");
    for (const SpecTrace& t : traces) {
        for (const PolyCurve& c : t.report.curves) w.polyline(c.points, c.closed, "fill:none;stroke:#222222;stroke-width:1.5");
    }
    w.close_layer();

    w.open_layer("segments");
    for (const SpecTrace& t : traces) {
        for (const SegmentSpan& s : t.report.segments) {
            const PolyCurve& c = t.report.curves[s.curve];
            const int n = static_cast<int>(c.points.size());
            std::vector<Vec2> run;
            for (int k = s.start;; k = (k + 1) % n) {
                run.push_back(c.points[k]);
                if (k == s.end) break;
            }
            w.polyline(run, false, "fill:none;stroke:#d62828;stroke-width:3");
        }
    }
    w.close_layer();

    w.open_layer("asymptotes");
    for (const SpecTrace& t : traces) {
        if (!t.asymptotes) continue;
        for (const AsymptoteItem& a : t.asymptotes->items) {
            if (a.kind == AsymptoteItem::Kind::Line) {
                if (auto seg = detail::clip_line(a.line, w.box())) {
                    w.segment(seg->first, seg->second, "stroke:#2a9d8f;stroke-width:1");
                }
            } else {
                for (Vec2 d : {a.dir1, a.dir2, -a.dir1, -a.dir2}) {
                    if (auto seg = detail::clip_line(Line(a.apex, d), w.box(), 0.0)) {
                        w.segment(seg->first, seg->second, "stroke:#2a9d8f;stroke-width:1");
                    }
                }
            }
        }
    }
    w.close_layer();

    w.open_layer("foci");
    for (const SpecTrace& t : traces) {
        std::visit(Overloaded{
                       [&](const EllipseFoci& s) { w.marker(s.f1, "#1d3557"); w.marker(s.f2, "#1d3557"); },
                       [&](const HyperbolaFoci& s) { w.marker(s.f1, "#1d3557"); w.marker(s.f2, "#1d3557"); },
                       [&](const EllipseLeadingCircle& s) { w.marker({0, 0}, "#1d3557"); w.marker(s.focus, "#1d3557"); },
                       [&](const HyperbolaLeadingCircle& s) { w.marker({0, 0}, "#1d3557"); w.marker(s.focus, "#1d3557"); },
                       [&](const LeadingLineConic& s) { w.marker(s.focus, "#1d3557"); },
                       [&](const Bisector& s) { w.marker(s.x, "#1d3557"); w.marker(s.y, "#1d3557"); },
                       [&](const DSegment& s) { w.marker(s.x, "#1d3557"); w.marker(s.y, "#1d3557"); },
                   },
                   t.spec);
    }
    w.close_layer();
    return w.finish();
}

}  // namespace mink
