#pragma once

// Unit balls of normed planes and the primitive metric queries built on them:
// gauge, support function, contact faces, distances to lines, tangency of
// homothetic disks and Birkhoff orthogonality.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "minkconic/error.hpp"
#include "minkconic/roots.hpp"
#include "minkconic/vec2.hpp"

namespace mink {

/// Straight line given by a point and a nonzero direction.
struct Line {
    Vec2 point;
    Vec2 direction;

    Line() = default;
    Line(Vec2 p, Vec2 d) : point(p), direction(d) {
        if (!(euclid_norm(d) > 0.0) || !is_finite(d) || !is_finite(p)) {
            throw InvalidInput("line direction must be a finite nonzero vector");
        }
    }

    static Line through(Vec2 a, Vec2 b) { return Line(a, b - a); }
    static Line vertical(double x) { return Line({x, 0.0}, {0.0, 1.0}); }
    static Line horizontal(double y) { return Line({0.0, y}, {1.0, 0.0}); }

    /// Euclidean unit normal, a quarter turn counterclockwise from the direction.
    Vec2 normal() const { return euclid_unit(perp(direction)); }
    /// Right-hand side c of the normal form <normal, w> = c.
    double offset() const { return dot(normal(), point); }
    /// Signed Euclidean distance, positive on the side the normal points to.
    double signed_euclid_distance(Vec2 z) const { return dot(normal(), z - point); }
    Vec2 at(double t) const { return point + euclid_unit(direction) * t; }

    bool operator==(const Line&) const = default;
};

/// Argmax set of a linear functional over the unit ball.
struct ContactFace {
    enum class Kind { Point, Segment };
    Kind kind = Kind::Point;
    Vec2 a;
    Vec2 b;

    static ContactFace point(Vec2 p) { return {Kind::Point, p, p}; }
    static ContactFace segment(Vec2 p, Vec2 q) { return {Kind::Segment, p, q}; }

    bool is_segment() const { return kind == Kind::Segment; }
    Vec2 midpoint() const { return (a + b) * 0.5; }
    /// Image under w -> center + scale * w.
    ContactFace mapped(Vec2 center, double scale) const {
        return {kind, center + a * scale, center + b * scale};
    }
};

enum class Tangency { External, Internal, None };

struct BallProperties {
    bool strictly_convex;
    bool smooth;
};

/// Where a boundary point sits relative to the flat pieces of the unit circle.
enum class BoundaryLocale { StrictlyConvex, FlatInterior, Vertex };

/// Origin-symmetric convex body defining the norm: an l_p ball (p in [1, inf],
/// infinity kept as a tag) or a convex polygon.
class UnitBall {
public:
    enum class Kind { Lp, Polygon };

    static UnitBall lp(double p) {
        if (!(p >= 1.0) || !std::isfinite(p)) {
            throw InvalidInput("l_p ball requires finite p >= 1 (use lp_infinity for p = inf)");
        }
        UnitBall b;
        b.kind_ = Kind::Lp;
        b.p_ = p;
        if (p == 1.0) b.set_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
        return b;
    }

    static UnitBall lp_infinity() {
        UnitBall b;
        b.kind_ = Kind::Lp;
        b.infinite_ = true;
        b.p_ = std::numeric_limits<double>::infinity();
        b.set_polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
        return b;
    }

    static UnitBall euclidean() { return lp(2.0); }

    /// Counterclockwise, strictly convex, origin-symmetric polygon with at
    /// least four vertices and the origin in its interior.
    static UnitBall polygon(std::vector<Vec2> vertices) {
        validate_polygon(vertices);
        UnitBall b;
        b.kind_ = Kind::Polygon;
        b.set_polygon(std::move(vertices));
        return b;
    }

    /// Regular polygon with an even number of vertices on the Euclidean unit
    /// circle, first vertex at angle `phase`.
    static UnitBall regular_polygon(int n, double phase = 0.0) {
        if (n < 4 || n % 2 != 0) throw InvalidInput("regular polygon ball needs an even vertex count >= 4");
        std::vector<Vec2> v;
        v.reserve(n);
        for (int k = 0; k < n; ++k) {
            v.push_back(unit_at_angle(phase + 2.0 * std::numbers::pi * k / n));
        }
        for (int k = n / 2; k < n; ++k) v[k] = -v[k - n / 2];
        return polygon(std::move(v));
    }

    Kind kind() const { return kind_; }
    bool is_lp() const { return kind_ == Kind::Lp; }
    bool is_polygon() const { return kind_ == Kind::Polygon; }
    bool is_lp_infinity() const { return kind_ == Kind::Lp && infinite_; }
    /// Exponent for l_p balls (+inf for the tagged infinity ball).
    double p() const { return p_; }
    /// True when the gauge is evaluated through polygon edge functionals
    /// (polygons and p in {1, inf}).
    bool has_polygon() const { return !vertices_.empty(); }
    const std::vector<Vec2>& vertices() const { return vertices_; }

    std::string describe() const {
        if (kind_ == Kind::Lp) {
            if (infinite_) return "lp:inf";
            std::ostringstream os;
            os.precision(17);
            os << "lp:" << p_;
            return os.str();
        }
        return "polygon[" + std::to_string(vertices_.size()) + "]";
    }

    /// Gauge of the ball.
    double norm(Vec2 v) const {
        if (kind_ == Kind::Lp) {
            const double ax = std::abs(v.x);
            const double ay = std::abs(v.y);
            if (infinite_) return std::max(ax, ay);
            if (p_ == 1.0) return ax + ay;
            if (p_ == 2.0) return std::hypot(ax, ay);
            const double m = std::max(ax, ay);
            if (m == 0.0) return 0.0;
            return m * std::pow(std::pow(ax / m, p_) + std::pow(ay / m, p_), 1.0 / p_);
        }
        double g = 0.0;
        for (const Vec2& e : edge_functionals_) g = std::max(g, dot(e, v));
        return g;
    }

    /// Support function h(n) = max over the ball of <n, .>.
    double support(Vec2 n) const {
        require_nonzero(n, "support");
        if (has_polygon()) {
            double h = -std::numeric_limits<double>::infinity();
            for (const Vec2& v : vertices_) h = std::max(h, dot(n, v));
            return h;
        }
        return dual_norm(n);
    }

    /// Argmax set of <n, .> over the ball.
    ContactFace contact_face(Vec2 n) const {
        require_nonzero(n, "contact_face");
        if (has_polygon()) return polygon_contact_face(n);
        const double q = p_ / (p_ - 1.0);
        const double scale = dual_norm(n);
        auto comp = [&](double c) {
            const double a = std::abs(c) / scale;
            return std::copysign(std::pow(a, q - 1.0), c);
        };
        return ContactFace::point({comp(n.x), comp(n.y)});
    }

    BallProperties properties() const {
        if (kind_ == Kind::Lp && !infinite_ && p_ > 1.0) return {true, true};
        return {false, false};
    }

    /// Largest Euclidean disk centered at the origin inside the ball.
    double euclid_inradius() const {
        if (has_polygon()) {
            double r = std::numeric_limits<double>::infinity();
            const std::size_t n = vertices_.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2 a = vertices_[i];
                const Vec2 b = vertices_[(i + 1) % n];
                r = std::min(r, std::abs(cross(b - a, a)) / euclid_dist(a, b));
            }
            return r;
        }
        return p_ >= 2.0 ? 1.0 : std::pow(2.0, 0.5 - 1.0 / p_);
    }

    /// Lipschitz constant of the norm with respect to Euclidean distance.
    double lipschitz() const { return 1.0 / euclid_inradius(); }

    /// Largest Euclidean length of a unit vector.
    double euclid_circumradius() const {
        if (has_polygon()) {
            double r = 0.0;
            for (const Vec2& v : vertices_) r = std::max(r, euclid_norm(v));
            return r;
        }
        return p_ <= 2.0 ? 1.0 : std::pow(2.0, 0.5 - 1.0 / p_);
    }

    /// Point of the unit circle in the direction of u.
    Vec2 boundary_point(Vec2 u) const {
        require_nonzero(u, "boundary_point");
        return u / norm(u);
    }

    /// Classifies a point of the unit circle (given up to scaling).
    BoundaryLocale locale(Vec2 x, double tol = 1e-9) const {
        if (!has_polygon()) return BoundaryLocale::StrictlyConvex;
        const Vec2 s = boundary_point(x);
        for (const Vec2& v : vertices_) {
            if (euclid_dist(s, v) <= tol * euclid_circumradius()) return BoundaryLocale::Vertex;
        }
        return BoundaryLocale::FlatInterior;
    }

private:
    UnitBall() = default;

    static void require_nonzero(Vec2 n, const char* op) {
        if (!(n.x != 0.0 || n.y != 0.0) || !is_finite(n)) {
            throw InvalidInput(std::string(op) + ": direction must be a finite nonzero vector");
        }
    }

    double dual_norm(Vec2 n) const {
        const double ax = std::abs(n.x);
        const double ay = std::abs(n.y);
        if (p_ == 2.0) return std::hypot(ax, ay);
        const double q = p_ / (p_ - 1.0);
        const double m = std::max(ax, ay);
        return m * std::pow(std::pow(ax / m, q) + std::pow(ay / m, q), 1.0 / q);
    }

    static void validate_polygon(const std::vector<Vec2>& v) {
        const std::size_t n = v.size();
        if (n < 4) throw InvalidInput("polygon ball needs at least 4 vertices");
        double scale = 0.0;
        for (const Vec2& p : v) {
            if (!is_finite(p)) throw InvalidInput("polygon vertex is not finite");
            scale = std::max(scale, euclid_norm(p));
        }
        if (!(scale > 0.0)) throw InvalidInput("polygon is degenerate");
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = v[i];
            const Vec2 b = v[(i + 1) % n];
            const Vec2 c = v[(i + 2) % n];
            const Vec2 e1 = b - a;
            const Vec2 e2 = c - b;
            if (euclid_norm(e1) <= 1e-12 * scale) throw InvalidInput("polygon has repeated vertices");
            if (cross(e1, e2) <= 1e-12 * euclid_norm(e1) * euclid_norm(e2)) {
                throw InvalidInput("polygon must be counterclockwise and strictly convex (vertex " +
                                   std::to_string((i + 1) % n) + ")");
            }
            if (cross(e1, -a) <= 0.0) throw InvalidInput("origin must lie strictly inside the polygon");
        }
        for (const Vec2& p : v) {
            const bool mirrored = std::any_of(v.begin(), v.end(), [&](const Vec2& q) {
                return euclid_dist(q, -p) <= 1e-9 * scale;
            });
            if (!mirrored) throw InvalidInput("polygon must be symmetric about the origin");
        }
    }

    void set_polygon(std::vector<Vec2> v) {
        vertices_ = std::move(v);
        edge_functionals_.clear();
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = vertices_[i];
            const Vec2 b = vertices_[(i + 1) % n];
            const Vec2 normal{b.y - a.y, a.x - b.x};
            edge_functionals_.push_back(normal / dot(normal, a));
        }
    }

    ContactFace polygon_contact_face(Vec2 n) const {
        const std::size_t m = vertices_.size();
        std::size_t best = 0;
        double hmax = dot(n, vertices_[0]);
        for (std::size_t i = 1; i < m; ++i) {
            const double h = dot(n, vertices_[i]);
            if (h > hmax) {
                hmax = h;
                best = i;
            }
        }
        const double tol = 1e-12 * euclid_norm(n) * euclid_circumradius();
        const std::size_t next = (best + 1) % m;
        const std::size_t prev = (best + m - 1) % m;
        if (dot(n, vertices_[next]) >= hmax - tol) return ContactFace::segment(vertices_[best], vertices_[next]);
        if (dot(n, vertices_[prev]) >= hmax - tol) return ContactFace::segment(vertices_[prev], vertices_[best]);
        return ContactFace::point(vertices_[best]);
    }

    Kind kind_ = Kind::Lp;
    double p_ = 2.0;
    bool infinite_ = false;
    std::vector<Vec2> vertices_;
    std::vector<Vec2> edge_functionals_;
};

// Free-function surface of the norm engine.

inline double norm(const UnitBall& B, Vec2 v) { return B.norm(v); }
inline double support(const UnitBall& B, Vec2 n) { return B.support(n); }
inline ContactFace contact_face(const UnitBall& B, Vec2 n) { return B.contact_face(n); }
inline BallProperties ball_properties(const UnitBall& B) { return B.properties(); }

/// Minkowski distance from z to the line, |<n, z - p>| / h(n).
inline double dist_point_line(const UnitBall& B, Vec2 z, const Line& l) {
    const Vec2 n = l.normal();
    return std::abs(dot(n, z - l.point)) / B.support(n);
}

/// Contact set of the disk z + rK with the line l it touches.
inline ContactFace touch_face_with_line(const UnitBall& B, Vec2 z, double r, const Line& l,
                                        double tol = kGeomTol) {
    if (!(r > 0.0)) throw InvalidInput("touch_face_with_line: radius must be positive");
    const double d = dist_point_line(B, z, l);
    if (std::abs(d - r) > tol * std::max(1.0, r)) {
        throw InvalidInput("touch_face_with_line: disk is not tangent to the line");
    }
    const Vec2 n = l.normal();
    const double side = dot(n, z - l.point) >= 0.0 ? 1.0 : -1.0;
    return B.contact_face(n * -side).mapped(z, r);
}

/// Relative drop (||x|| - min_a ||x + a y||) / ||x||, never negative. The
/// bracket [-R, R] with R = 4 ||x|| / ||y|| holds the minimizer since
/// ||x + a y|| > ||x|| once |a| > 2 ||x|| / ||y||.
inline double birkhoff_defect(const UnitBall& B, Vec2 x, Vec2 y) {
    const double nx = B.norm(x);
    const double ny = B.norm(y);
    if (!(nx > 0.0) || !(ny > 0.0)) throw InvalidInput("Birkhoff orthogonality needs nonzero vectors");
    const double R = 4.0 * nx / ny;
    const MinResult m = golden_section_min([&](double a) { return B.norm(x + y * a); }, -R, R, 1e-12 * R);
    return std::max(0.0, (nx - m.value) / nx);
}

/// x is Birkhoff orthogonal to y: ||x + a y|| >= ||x|| for every real a, up
/// to a relative tolerance.
inline bool is_birkhoff_orthogonal(const UnitBall& B, Vec2 x, Vec2 y, double tol = kGeomTol) {
    return birkhoff_defect(B, x, y) <= tol;
}

/// Unit vector Birkhoff orthogonal to the line's direction: the contact
/// point of the ball with the Euclidean normal (midpoint for an edge).
inline Vec2 birkhoff_transversal(const UnitBall& B, const Line& l) {
    return B.contact_face(l.normal()).midpoint();
}

struct TangencyGaps {
    /// ||z1 - z2|| - (r1 + r2)
    double external;
    /// ||z1 - z2|| - |r1 - r2|
    double internal;
};

inline TangencyGaps tangency_gaps(const UnitBall& B, Vec2 z1, double r1, Vec2 z2, double r2) {
    const double d = B.norm(z1 - z2);
    return {d - (r1 + r2), d - std::abs(r1 - r2)};
}

/// Tangency type of the homothetic disks z1 + r1 K and z2 + r2 K.
inline Tangency disks_tangency(const UnitBall& B, Vec2 z1, double r1, Vec2 z2, double r2,
                               double tol = kGeomTol) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidInput("disks_tangency: radii must be positive");
    const TangencyGaps g = tangency_gaps(B, z1, r1, z2, r2);
    if (std::abs(g.external) <= tol) return Tangency::External;
    if (std::abs(g.internal) <= tol) return Tangency::Internal;
    return Tangency::None;
}

}  // namespace mink
