#pragma once

// Polyline extraction of loci: radial tracing for bounded convex loci,
// directional sweeps for unbounded ones, region rasterization for the
// degenerate two-dimensional cases, plus the curve diagnostics (segments,
// convexity, Hausdorff distance) and asymptote assembly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "minkconic/error.hpp"
#include "minkconic/loci.hpp"
#include "minkconic/roots.hpp"
#include "minkconic/unit_ball.hpp"

namespace mink {

struct PolyCurve {
    std::vector<Vec2> points;
    bool closed = false;
    /// Every point satisfies |residual| <= residual_tol.
    double residual_tol = 0.0;
    /// Bracket width used when locating the points.
    double param_tol = kRootTol;
};

struct SegmentSpan {
    int curve = 0;
    int start = 0;
    /// Inclusive; on closed curves the span may wrap past the last index.
    int end = 0;
    /// True for a zero interval found on a single sweep line.
    bool root_interval = false;
};

/// Roots found on one sweep line, per output curve.
struct LineCrossings {
    double offset = 0.0;
    int first = 0;
    int second = 0;
    int intervals = 0;
    int total() const { return first + second; }
};

struct BBox {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    bool empty() const { return !(xmax > xmin) || !(ymax > ymin); }
};

/// Cell memberships, row-major with row 0 at ymin.
struct RegionGrid {
    BBox bbox;
    int nx = 0;
    int ny = 0;
    std::vector<Membership> cells;

    Membership at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * nx + ix]; }
    Vec2 center(int ix, int iy) const {
        return {bbox.xmin + (ix + 0.5) * (bbox.xmax - bbox.xmin) / nx,
                bbox.ymin + (iy + 0.5) * (bbox.ymax - bbox.ymin) / ny};
    }
    std::size_t count(Membership m) const {
        return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), m));
    }
    double fraction(Membership m) const { return cells.empty() ? 0.0 : double(count(m)) / cells.size(); }
};

struct TraceReport {
    std::vector<PolyCurve> curves;
    std::vector<SegmentSpan> segments;
    Degeneracy degeneracy = Degeneracy::Nondegenerate;
    std::optional<RegionGrid> region;
    std::vector<LineCrossings> lines;

    bool has_root_intervals() const {
        return std::any_of(segments.begin(), segments.end(), [](const SegmentSpan& s) { return s.root_interval; });
    }
};

struct AsymptoteItem {
    enum class Kind { Line, Cone };
    Kind kind = Kind::Line;
    Line line;
    Vec2 apex;
    Vec2 dir1, dir2;
};

/// Supporting line of the leading circle through the focus, with its contact.
struct TangentData {
    Line tangent;
    Vec2 normal;
    ContactFace on_leading_circle;
    ContactFace on_unit_ball;
};

struct AsymptoteSet {
    Vec2 center;
    std::vector<TangentData> tangents;
    std::vector<AsymptoteItem> items;
};

// ---------------------------------------------------------------------------
// Curve diagnostics

struct SegmentOptions {
    /// Largest turn between consecutive edges inside a run (radians).
    double angle_tol = 1e-4;
    /// Runs shorter than this fraction of the curve diameter are dropped.
    double min_length_frac = 1e-2;
    /// Largest distance of a run point from the run's chord, as a fraction
    /// of the curve diameter; never below 4x the curve's bracket width.
    double chord_tol_frac = 1e-15;
};

inline double curve_diameter(const PolyCurve& c) {
    if (c.points.empty()) return 0.0;
    double xmin = c.points[0].x, xmax = xmin, ymin = c.points[0].y, ymax = ymin;
    for (const Vec2& p : c.points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

namespace detail {

inline double turn_angle(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 e1 = b - a;
    const Vec2 e2 = c - b;
    return std::abs(std::atan2(cross(e1, e2), dot(e1, e2)));
}

inline double chord_deviation(Vec2 a, Vec2 b, Vec2 p) {
    const double len = euclid_dist(a, b);
    if (len == 0.0) return euclid_dist(a, p);
    return std::abs(cross(b - a, p - a)) / len;
}

}  // namespace detail

/// Maximal straight runs of a polyline.
inline std::vector<SegmentSpan> detect_segments(const PolyCurve& curve, const SegmentOptions& opt = {}) {
    std::vector<SegmentSpan> spans;
    const int n = static_cast<int>(curve.points.size());
    if (n < 3) return spans;
    const double diam = curve_diameter(curve);
    const double min_len = opt.min_length_frac * diam;
    const double chord_tol = std::max(opt.chord_tol_frac * diam, 4.0 * curve.param_tol);

    // Closed curves start at a corner so no run straddles the seam.
    int offset = 0;
    if (curve.closed) {
        for (int k = 0; k < n; ++k) {
            const Vec2 a = curve.points[(k + n - 1) % n];
            const Vec2 b = curve.points[k];
            const Vec2 c = curve.points[(k + 1) % n];
            if (detail::turn_angle(a, b, c) > opt.angle_tol) {
                offset = k;
                break;
            }
        }
    }
    const int m = curve.closed ? n + 1 : n;
    auto pt = [&](int i) { return curve.points[(i + offset) % n]; };

    auto straight = [&](int i, int j) {
        const Vec2 a = pt(i);
        const Vec2 b = pt(j);
        for (int k = i + 1; k < j; ++k) {
            if (detail::chord_deviation(a, b, pt(k)) > chord_tol) return false;
            if (detail::turn_angle(pt(k - 1), pt(k), pt(k + 1)) > opt.angle_tol) return false;
        }
        return true;
    };

    int i = 0;
    while (i + 2 < m) {
        if (!straight(i, i + 2)) {
            ++i;
            continue;
        }
        int j = i + 2;
        while (j + 1 < m && straight(i, j + 1)) ++j;
        double len = 0.0;
        for (int k = i; k < j; ++k) len += euclid_dist(pt(k), pt(k + 1));
        if (len >= min_len) {
            spans.push_back({0, (i + offset) % n, (j + offset) % n, false});
            i = j;
        } else {
            ++i;
        }
    }
    return spans;
}

struct ConvexityResult {
    bool convex = true;
    /// Index of the first vertex turning the wrong way (-1 when convex).
    int witness = -1;
};

/// Convexity of a closed polyline: every turn has the orientation's sign,
/// up to a tolerance on the sine of the turning angle. A wrong turn whose
/// vertex sits within 2 param_tol of the neighbours' chord is root jitter on
/// a straight piece and is accepted.
inline ConvexityResult convexity_check(const PolyCurve& curve, double tol = 1e-9) {
    if (!curve.closed) throw InvalidInput("convexity_check requires a closed curve");
    const auto& p = curve.points;
    const int n = static_cast<int>(p.size());
    if (n < 3) throw InvalidInput("convexity_check requires at least 3 points");
    double area2 = 0.0;
    for (int i = 0; i < n; ++i) area2 += cross(p[i], p[(i + 1) % n]);
    const double orient = area2 >= 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
        const Vec2 e1 = p[i] - p[(i + n - 1) % n];
        const Vec2 e2 = p[(i + 1) % n] - p[i];
        const double c = orient * cross(e1, e2);
        if (c / (euclid_norm(e1) * euclid_norm(e2)) >= -tol) continue;
        const double off_chord = -c / euclid_norm(e1 + e2);
        if (off_chord > 2.0 * curve.param_tol + 16.0 * std::numeric_limits<double>::epsilon() * euclid_norm(p[i])) {
            return {false, i};
        }
    }
    // A star-shaped polyline can turn consistently yet wind more than once.
    double winding = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2 e1 = p[i] - p[(i + n - 1) % n];
        const Vec2 e2 = p[(i + 1) % n] - p[i];
        winding += std::atan2(cross(e1, e2), dot(e1, e2));
    }
    if (std::abs(winding) > 2.0 * std::numbers::pi + 1e-6) return {false, 0};
    return {};
}

inline double distance_to_polyline(Vec2 q, const PolyCurve& c) {
    const auto& p = c.points;
    if (p.size() == 1) return euclid_dist(q, p[0]);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t edges = c.closed ? p.size() : p.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        best = std::min(best, point_segment_distance(q, p[i], p[(i + 1) % p.size()]));
    }
    return best;
}

/// Symmetric Hausdorff distance between the sample points of each curve and
/// the polyline of the other.
inline double hausdorff_distance(const PolyCurve& c1, const PolyCurve& c2) {
    if (c1.points.empty() || c2.points.empty()) throw InvalidInput("hausdorff_distance: empty curve");
    double h = 0.0;
    for (const Vec2& q : c1.points) h = std::max(h, distance_to_polyline(q, c2));
    for (const Vec2& q : c2.points) h = std::max(h, distance_to_polyline(q, c1));
    return h;
}

// ---------------------------------------------------------------------------
// Radial tracing

/// Traces the zero set of `g` (negative inside) along n equally spaced rays
/// from `seed`; each ray must leave the interior exactly once.
template <class G>
std::vector<Vec2> radial_points(G&& g, Vec2 seed, int n, double tol, double scale) {
    if (n < 3) throw InvalidInput("radial_trace needs at least 3 directions");
    if (!(g(seed) < 0.0)) throw InvalidInput("radial_trace: seed is not an interior point");
    std::vector<Vec2> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        const Vec2 u = unit_at_angle(theta);
        auto along = [&](double t) { return g(seed + u * t); };
        double lo = 0.0;
        double hi = 0.25 * scale;
        int k = 0;
        while (along(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (++k > 200) {
                throw NumericalFailure("radial_trace: bracketing failed in direction (" + std::to_string(u.x) +
                                       ", " + std::to_string(u.y) + ")");
            }
        }
        out.push_back(seed + u * bisect(along, lo, hi, tol));
    }
    return out;
}

namespace detail {

inline void require_radial(const UnitBall& B, const ConicSpec& spec) {
    validate(B, spec);
    if (const auto* e = std::get_if<EllipseFoci>(&spec)) {
        if (classify_degeneracy(B, spec) != Degeneracy::Nondegenerate) {
            throw InvalidInput(std::string("radial_trace: degenerate focal ellipse (") +
                               to_string(classify_degeneracy(B, spec)) + ")");
        }
        (void)e;
        return;
    }
    if (std::holds_alternative<EllipseLeadingCircle>(spec)) return;
    if (const auto* l = std::get_if<LeadingLineConic>(&spec); l && l->gamma > 1.0) return;
    throw InvalidInput("radial_trace: spec is not a bounded convex locus");
}

inline double residual_bound(const UnitBall& B, const ConicSpec& spec, double tol, double extent) {
    const double eps = std::numeric_limits<double>::epsilon();
    return residual_lipschitz(B, spec) * (tol + 64.0 * eps * std::max(1.0, extent));
}

inline void certify(const UnitBall& B, const ConicSpec& spec, const PolyCurve& c) {
    for (const Vec2& z : c.points) {
        if (!(std::abs(residual(B, spec, z)) <= c.residual_tol)) {
            throw NumericalFailure("traced point violates the residual tolerance");
        }
    }
}

inline double max_abs_coord(const std::vector<Vec2>& pts) {
    double m = 0.0;
    for (const Vec2& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return m;
}

}  // namespace detail

/// Default interior seed for a bounded convex locus.
inline Vec2 default_seed(const UnitBall& B, const ConicSpec& spec) {
    (void)B;
    if (const auto* e = std::get_if<EllipseFoci>(&spec)) return (e->f1 + e->f2) * 0.5;
    if (const auto* e = std::get_if<EllipseLeadingCircle>(&spec)) return e->focus * 0.5;
    if (const auto* l = std::get_if<LeadingLineConic>(&spec)) return l->focus;
    throw InvalidInput("default_seed: spec is not a bounded convex locus");
}

/// Closed polyline of a bounded convex locus.
inline PolyCurve radial_trace(const UnitBall& B, const ConicSpec& spec, Vec2 seed, int n, double tol = kRootTol) {
    detail::require_radial(B, spec);
    const double sign = interior_is_positive(spec) ? -1.0 : 1.0;
    const double scale = characteristic_size(B, spec) + euclid_norm(seed);
    PolyCurve c;
    c.points = radial_points([&](Vec2 z) { return sign * residual(B, spec, z); }, seed, n, tol, scale);
    c.closed = true;
    c.param_tol = tol;
    c.residual_tol = detail::residual_bound(B, spec, tol, detail::max_abs_coord(c.points));
    detail::certify(B, spec, c);
    return c;
}

/// Leading-circle ellipse traced through the direct tangency definition
/// (internal tangency gap of z + eps K and R K with eps = ||z - focus||)
/// instead of the reduced residual.
inline PolyCurve radial_trace_tangency(const UnitBall& B, const EllipseLeadingCircle& spec, Vec2 seed, int n,
                                       double tol = kRootTol) {
    validate(B, spec);
    const double scale = spec.R + euclid_norm(seed);
    PolyCurve c;
    c.points = radial_points([&](Vec2 z) { return leading_circle_tangency_defect(B, spec, z); }, seed, n, tol, scale);
    c.closed = true;
    c.param_tol = tol;
    c.residual_tol = detail::residual_bound(B, spec, tol, detail::max_abs_coord(c.points));
    detail::certify(B, spec, c);
    return c;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
    /// Half-width of the swept window; 0 selects 8 * max(2a, 2c) (focal
    /// hyperbolas) or 8 * dist(focus, l) (leading-line conics).
    double extent = 0.0;
    int n_lines = 257;
    int stations = 1024;
    double tol = kRootTol;
    SegmentOptions segments{};
};

namespace detail {

/// Doubles T until `beyond(T)` holds; returns nullopt past the cap. The cap
/// stays well below the range where rounding noise in the residual could
/// fake a sign change.
template <class P>
std::optional<double> expand(P&& beyond, double T0, int cap = 24) {
    double T = T0;
    for (int k = 0; k < cap; ++k, T *= 2.0) {
        if (beyond(T)) return T;
    }
    return std::nullopt;
}

inline void add_detected_segments(TraceReport& rep, const SegmentOptions& opt) {
    for (std::size_t ci = 0; ci < rep.curves.size(); ++ci) {
        for (SegmentSpan s : detect_segments(rep.curves[ci], opt)) {
            s.curve = static_cast<int>(ci);
            rep.segments.push_back(s);
        }
    }
}

}  // namespace detail

/// Sweep of a focal hyperbola with lines parallel to the focal segment,
/// stacked along the Birkhoff transversal of that direction.
inline TraceReport sweep_trace_hyperbola_foci(const UnitBall& B, const HyperbolaFoci& spec,
                                              const SweepOptions& opt = {}) {
    validate(B, spec);
    TraceReport rep;
    rep.degeneracy = classify_degeneracy(B, spec);
    if (rep.degeneracy != Degeneracy::Nondegenerate) {
        throw InvalidInput(std::string("sweep_trace_hyperbola_foci: degenerate spec (") + to_string(rep.degeneracy) +
                           ")");
    }
    if (opt.n_lines < 2) throw InvalidInput("sweep needs at least 2 lines");
    const double two_c = B.norm(spec.f2 - spec.f1);
    const double extent = opt.extent > 0.0 ? opt.extent : 8.0 * std::max(2.0 * spec.a, two_c);
    const Vec2 center = (spec.f1 + spec.f2) * 0.5;
    const Vec2 d = euclid_unit(spec.f2 - spec.f1);
    const Vec2 v = birkhoff_transversal(B, Line(center, d));
    const double scale = std::max(2.0 * spec.a, two_c);

    ScanOptions scan;
    scan.stations = std::max(512, opt.stations);
    scan.tol = opt.tol;
    scan.zero_tol = 1e-12 * scale;

    PolyCurve near_f1, near_f2;
    for (PolyCurve* c : {&near_f1, &near_f2}) c->param_tol = opt.tol;
    std::vector<std::pair<int, int>> intervals;  // (curve, index of first endpoint)

    for (int j = 0; j < opt.n_lines; ++j) {
        const double s = -extent + 2.0 * extent * j / (opt.n_lines - 1);
        const Vec2 q = center + v * s;
        auto at = [&](double t) { return q + d * t; };
        auto fplus = [&](double t) { return branch_residuals(B, spec, at(t)).first; };
        auto fminus = [&](double t) { return branch_residuals(B, spec, at(t)).second; };
        const auto T = detail::expand([&](double t) { return fplus(t) > 0.0 && fminus(-t) < 0.0; },
                                      extent + euclid_norm(spec.f2 - spec.f1));
        if (!T) throw NumericalFailure("sweep_trace_hyperbola_foci: branch window did not close");
        LineCrossings lc;
        lc.offset = s;
        for (int branch = 0; branch < 2; ++branch) {
            PolyCurve& curve = branch == 0 ? near_f1 : near_f2;
            const auto hits = branch == 0 ? scan_roots(fminus, -*T, *T, scan) : scan_roots(fplus, -*T, *T, scan);
            (branch == 0 ? lc.first : lc.second) = static_cast<int>(hits.size());
            for (const RootHit& h : hits) {
                if (h.is_interval()) {
                    ++lc.intervals;
                    intervals.emplace_back(branch, static_cast<int>(curve.points.size()));
                    curve.points.push_back(at(h.lo));
                    curve.points.push_back(at(h.hi));
                } else {
                    curve.points.push_back(at(h.lo));
                }
            }
        }
        rep.lines.push_back(lc);
    }

    const ConicSpec as_spec = spec;
    for (PolyCurve* c : {&near_f1, &near_f2}) {
        c->residual_tol = detail::residual_bound(B, as_spec, opt.tol, detail::max_abs_coord(c->points)) +
                          2.0 * scan.zero_tol;
        detail::certify(B, as_spec, *c);
    }
    rep.curves = {std::move(near_f1), std::move(near_f2)};
    for (auto [ci, k] : intervals) rep.segments.push_back({ci, k, k + 1, true});
    detail::add_detected_segments(rep, opt.segments);
    return rep;
}

/// Sweep of a leading-line parabola (gamma = 1) or hyperbola (gamma < 1)
/// with lines along the Birkhoff transversal of l, stationed along l.
/// Curve 0 lies on the focal side of l, curve 1 (hyperbola only) opposite.
inline TraceReport sweep_trace_leading_line(const UnitBall& B, const LeadingLineConic& spec,
                                            const SweepOptions& opt = {}) {
    validate(B, spec);
    if (spec.gamma > 1.0) throw InvalidInput("sweep_trace_leading_line: gamma must be <= 1 (use radial_trace)");
    if (opt.n_lines < 2) throw InvalidInput("sweep needs at least 2 lines");
    const ConicSpec as_spec = spec;
    const Line& l = spec.line;
    const Vec2 n = l.normal();
    const Vec2 d = euclid_unit(l.direction);
    Vec2 v = birkhoff_transversal(B, l);
    if (dot(n, spec.focus - l.point) < 0.0) v = -v;
    const double h = dist_point_line(B, spec.focus, l);
    const double extent = opt.extent > 0.0 ? opt.extent : 8.0 * h;

    // Foot of the transversal through the focus: focus = foot + t_f v.
    const double t_f = dot(n, spec.focus - l.point) / dot(n, v);
    const Vec2 foot = spec.focus - v * t_f;

    ScanOptions scan;
    scan.stations = std::max(512, opt.stations);
    scan.tol = opt.tol;
    scan.zero_tol = 1e-12 * h;

    TraceReport rep;
    PolyCurve focal, opposite;
    for (PolyCurve* c : {&focal, &opposite}) c->param_tol = opt.tol;
    std::vector<std::pair<int, int>> intervals;

    for (int j = 0; j < opt.n_lines; ++j) {
        const double u = -extent + 2.0 * extent * j / (opt.n_lines - 1);
        const Vec2 q = foot + d * u;
        auto at = [&](double t) { return q + v * t; };
        auto f = [&](double t) { return residual(B, as_spec, at(t)); };
        LineCrossings lc;
        lc.offset = u;
        for (int side = 0; side < 2; ++side) {
            // With gamma = 1 the opposite side is empty: crossing l costs at
            // least dist(q, l) + dist(focus, l) > dist(q, l).
            if (side == 1 && spec.gamma == 1.0) continue;
            const double sgn = side == 0 ? 1.0 : -1.0;
            const auto T = detail::expand([&](double t) { return f(sgn * t) > 0.0; }, 2.0 * h + std::abs(u));
            if (!T) continue;
            PolyCurve& curve = side == 0 ? focal : opposite;
            auto hits = side == 0 ? scan_roots(f, 0.0, *T, scan) : scan_roots(f, -*T, 0.0, scan);
            if (side == 1) std::reverse(hits.begin(), hits.end());
            (side == 0 ? lc.first : lc.second) = static_cast<int>(hits.size());
            for (const RootHit& hit : hits) {
                const double a = side == 0 ? hit.lo : hit.hi;
                const double b = side == 0 ? hit.hi : hit.lo;
                if (hit.is_interval()) {
                    ++lc.intervals;
                    intervals.emplace_back(side, static_cast<int>(curve.points.size()));
                    curve.points.push_back(at(a));
                    curve.points.push_back(at(b));
                } else {
                    curve.points.push_back(at(a));
                }
            }
        }
        rep.lines.push_back(lc);
    }

    for (PolyCurve* c : {&focal, &opposite}) {
        c->residual_tol =
            detail::residual_bound(B, as_spec, opt.tol, detail::max_abs_coord(c->points)) + 2.0 * scan.zero_tol;
        detail::certify(B, as_spec, *c);
    }
    rep.curves.push_back(std::move(focal));
    if (!opposite.points.empty()) rep.curves.push_back(std::move(opposite));
    for (auto [ci, k] : intervals) {
        if (ci < static_cast<int>(rep.curves.size())) rep.segments.push_back({ci, k, k + 1, true});
    }
    detail::add_detected_segments(rep, opt.segments);
    return rep;
}

// ---------------------------------------------------------------------------
// Region rasterization

namespace detail {

/// Signed functions whose sign changes between neighbouring cell centers mark
/// a one-dimensional locus passing between them.
inline std::vector<double> crossing_values(const UnitBall& B, const ConicSpec& spec, Vec2 z) {
    if (const auto* h = std::get_if<HyperbolaFoci>(&spec)) {
        auto [p, m] = branch_residuals(B, *h, z);
        return {p, m};
    }
    if (const auto* h = std::get_if<HyperbolaLeadingCircle>(&spec)) {
        auto [p, m] = branch_residuals(B, *h, z);
        return {p, m};
    }
    if (std::holds_alternative<DSegment>(spec)) return {};
    return {residual(B, spec, z)};
}

}  // namespace detail

/// Membership of each cell center; a cell is also On when one of the
/// locus's signed functions changes sign between its center and the center
/// of its +x or +y neighbour.
inline RegionGrid region_grid(const UnitBall& B, const ConicSpec& spec, const BBox& bbox, int nx, int ny,
                              double tol = kGeomTol) {
    if (bbox.empty()) throw InvalidInput("region_grid: empty bounding box");
    if (nx < 1 || ny < 1) throw InvalidInput("region_grid: resolution must be positive");
    validate(B, spec);
    RegionGrid g;
    g.bbox = bbox;
    g.nx = nx;
    g.ny = ny;
    g.cells.resize(static_cast<std::size_t>(nx) * ny);
    std::vector<std::vector<double>> signs(static_cast<std::size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Vec2 c = g.center(ix, iy);
            const std::size_t k = static_cast<std::size_t>(iy) * nx + ix;
            g.cells[k] = membership(B, spec, c, tol);
            signs[k] = detail::crossing_values(B, spec, c);
        }
    }
    auto flips = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < signs[a].size(); ++i) {
            const double u = signs[a][i];
            const double w = signs[b][i];
            if ((u < -tol && w > tol) || (u > tol && w < -tol)) return true;
        }
        return false;
    };
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t k = static_cast<std::size_t>(iy) * nx + ix;
            if (g.cells[k] == Membership::On) continue;
            if ((ix + 1 < nx && flips(k, k + 1)) || (iy + 1 < ny && flips(k, k + nx))) g.cells[k] = Membership::On;
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Asymptotes

/// Supporting lines of the leading circle R K through the exterior focus and
/// the asymptote lines or cones they induce: each contact, pulled back to the
/// unit ball, gives a direction from the center focus / 2 (a line for point
/// contact, a cone for edge contact).
inline AsymptoteSet asymptote_candidates(const UnitBall& B, const HyperbolaLeadingCircle& spec) {
    if (!(spec.R > 0.0) || !(B.norm(spec.focus) > spec.R * (1.0 + 1e-12))) {
        throw InvalidInput("asymptote_candidates: focus must lie strictly outside the leading circle");
    }
    const Vec2 f = spec.focus;
    auto g = [&](double phi) {
        const Vec2 n = unit_at_angle(phi);
        return std::abs(dot(n, f)) - spec.R * B.support(n);
    };
    ScanOptions scan;
    scan.stations = 4096;
    scan.tol = 1e-14;
    scan.zero_tol = 1e-13 * B.norm(f);
    const auto hits = scan_roots(g, 0.0, std::numbers::pi, scan);

    AsymptoteSet out;
    out.center = f * 0.5;
    for (const RootHit& h : hits) {
        Vec2 n = unit_at_angle(0.5 * (h.lo + h.hi));
        if (dot(n, f) < 0.0) n = -n;
        TangentData t;
        t.normal = n;
        t.tangent = Line(f, perp(n));
        t.on_unit_ball = B.contact_face(n);
        t.on_leading_circle = t.on_unit_ball.mapped({0.0, 0.0}, spec.R);
        out.tangents.push_back(t);

        AsymptoteItem item;
        item.apex = out.center;
        if (t.on_unit_ball.is_segment()) {
            item.kind = AsymptoteItem::Kind::Cone;
            item.dir1 = t.on_unit_ball.a;
            item.dir2 = t.on_unit_ball.b;
            item.line = Line(out.center, t.on_unit_ball.midpoint());
        } else {
            item.kind = AsymptoteItem::Kind::Line;
            item.dir1 = item.dir2 = t.on_unit_ball.a;
            item.line = Line(out.center, t.on_unit_ball.a);
        }
        out.items.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch

struct TraceParams {
    int n = 720;
    double extent = 0.0;
    double tol = kRootTol;
    int n_lines = 257;
    BBox bbox{-4, 4, -4, 4};
    int grid_resolution = 256;
    double grid_tol = kGeomTol;
};

/// Chooses the tracing method for a spec: radial for bounded convex loci,
/// sweeps for hyperbolas and parabolas, rasterization for degenerate sets.
/// Throws InvalidInput("empty locus") for provably empty specs.
inline TraceReport trace_spec(const UnitBall& B, const ConicSpec& spec, const TraceParams& p) {
    validate(B, spec);
    const Degeneracy deg = classify_degeneracy(B, spec);
    if (deg == Degeneracy::Empty) throw InvalidInput("empty locus: " + kind_name(spec));
    SweepOptions sw;
    sw.extent = p.extent;
    sw.n_lines = p.n_lines;
    sw.tol = p.tol;
    TraceReport rep;
    if (deg != Degeneracy::Nondegenerate) {
        rep.degeneracy = deg;
        rep.region = region_grid(B, spec, p.bbox, p.grid_resolution, p.grid_resolution, p.grid_tol);
        return rep;
    }
    if (const auto* h = std::get_if<HyperbolaFoci>(&spec)) return sweep_trace_hyperbola_foci(B, *h, sw);
    if (const auto* h = std::get_if<HyperbolaLeadingCircle>(&spec)) {
        return sweep_trace_hyperbola_foci(B, HyperbolaFoci{{0.0, 0.0}, h->focus, 0.5 * h->R}, sw);
    }
    if (const auto* l = std::get_if<LeadingLineConic>(&spec); l && l->gamma <= 1.0) {
        return sweep_trace_leading_line(B, *l, sw);
    }
    rep.curves.push_back(radial_trace(B, spec, default_seed(B, spec), p.n, p.tol));
    detail::add_detected_segments(rep, {});
    return rep;
}

}  // namespace mink
