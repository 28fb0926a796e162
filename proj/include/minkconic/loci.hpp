#pragma once

// Metric conics, bisectors and d-segments as signed residual functions.
//
// Sign conventions (Interior side):
//   ellipse (foci / leading circle)   F < 0
//   hyperbola (foci / leading circle) F < 0   (between the branches)
//   leading-line conic                F > 0   (focal side)
//   bisector                          F < 0   (closer to x)
//   d-segment                         F >= 0 everywhere, locus is F = 0

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minkconic/error.hpp"
#include "minkconic/unit_ball.hpp"

namespace mink {

/// {z : ||z - f1|| + ||z - f2|| = 2a}
struct EllipseFoci {
    Vec2 f1, f2;
    double a;
    bool operator==(const EllipseFoci&) const = default;
};

/// {z : z + eps K touches the leading circle R K internally and has the
/// focus on its boundary}. Reduced form ||z|| + ||z - focus|| = R.
struct EllipseLeadingCircle {
    double R;
    Vec2 focus;
    bool operator==(const EllipseLeadingCircle&) const = default;
};

/// {z : | ||z - f1|| - ||z - f2|| | = 2a}
struct HyperbolaFoci {
    Vec2 f1, f2;
    double a;
    bool operator==(const HyperbolaFoci&) const = default;
};

/// Reduced form | ||z|| - ||z - focus|| | = R with the focus outside R K.
struct HyperbolaLeadingCircle {
    double R;
    Vec2 focus;
    bool operator==(const HyperbolaLeadingCircle&) const = default;
};

/// dist(z, l) = gamma ||z - focus||. gamma > 1 ellipse, = 1 parabola,
/// < 1 hyperbola.
struct LeadingLineConic {
    Vec2 focus;
    Line line;
    double gamma;
    bool operator==(const LeadingLineConic&) const = default;
};

struct Bisector {
    Vec2 x, y;
    bool operator==(const Bisector&) const = default;
};

struct DSegment {
    Vec2 x, y;
    bool operator==(const DSegment&) const = default;
};

using ConicSpec = std::variant<EllipseFoci, EllipseLeadingCircle, HyperbolaFoci, HyperbolaLeadingCircle,
                               LeadingLineConic, Bisector, DSegment>;

enum class Membership { Interior, On, Exterior };

enum class Degeneracy { Nondegenerate, DSegmentSet, BisectorSet, RaysOrCones, Empty };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::Interior: return "interior";
        case Membership::On: return "on";
        case Membership::Exterior: return "exterior";
    }
    return "?";
}

inline const char* to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::Nondegenerate: return "nondegenerate";
        case Degeneracy::DSegmentSet: return "d_segment_set";
        case Degeneracy::BisectorSet: return "bisector_set";
        case Degeneracy::RaysOrCones: return "rays_or_cones";
        case Degeneracy::Empty: return "empty";
    }
    return "?";
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

inline std::string kind_name(const ConicSpec& spec) {
    return std::visit(Overloaded{
                          [](const EllipseFoci&) { return std::string("ellipse_foci"); },
                          [](const EllipseLeadingCircle&) { return std::string("ellipse_leading_circle"); },
                          [](const HyperbolaFoci&) { return std::string("hyperbola_foci"); },
                          [](const HyperbolaLeadingCircle&) { return std::string("hyperbola_leading_circle"); },
                          [](const LeadingLineConic&) { return std::string("leading_line"); },
                          [](const Bisector&) { return std::string("bisector"); },
                          [](const DSegment&) { return std::string("d_segment"); },
                      },
                      spec);
}

namespace detail {

inline bool same_point(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidInput(msg);
}

inline void require_finite(Vec2 v, const char* what) {
    require(is_finite(v), std::string(what) + " must be finite");
}

}  // namespace detail

/// Throws InvalidInput when the spec violates its invariants under B. Empty
/// focal ellipses (2a < 2c) and over-long hyperbolas (2a > 2c) are valid
/// specs; classify_degeneracy reports them.
inline void validate(const UnitBall& B, const ConicSpec& spec) {
    using detail::require;
    std::visit(Overloaded{
                   [&](const EllipseFoci& s) {
                       detail::require_finite(s.f1, "f1");
                       detail::require_finite(s.f2, "f2");
                       require(!detail::same_point(s.f1, s.f2), "ellipse_foci: foci must differ");
                       require(std::isfinite(s.a) && s.a > 0.0, "ellipse_foci: a must be positive");
                   },
                   [&](const EllipseLeadingCircle& s) {
                       detail::require_finite(s.focus, "focus");
                       require(std::isfinite(s.R) && s.R > 0.0, "ellipse_leading_circle: R must be positive");
                       require(B.norm(s.focus) < s.R,
                               "ellipse_leading_circle: focus must lie strictly inside the leading circle");
                   },
                   [&](const HyperbolaFoci& s) {
                       detail::require_finite(s.f1, "f1");
                       detail::require_finite(s.f2, "f2");
                       require(!detail::same_point(s.f1, s.f2), "hyperbola_foci: foci must differ");
                       require(std::isfinite(s.a) && s.a >= 0.0, "hyperbola_foci: a must be nonnegative");
                   },
                   [&](const HyperbolaLeadingCircle& s) {
                       detail::require_finite(s.focus, "focus");
                       require(std::isfinite(s.R) && s.R > 0.0, "hyperbola_leading_circle: R must be positive");
                       require(B.norm(s.focus) > s.R,
                               "hyperbola_leading_circle: focus must lie outside the leading circle");
                   },
                   [&](const LeadingLineConic& s) {
                       detail::require_finite(s.focus, "focus");
                       require(std::isfinite(s.gamma) && s.gamma > 0.0, "leading_line: gamma must be positive");
                       require(dist_point_line(B, s.focus, s.line) > 0.0, "leading_line: focus lies on the line");
                   },
                   [&](const Bisector& s) {
                       require(is_finite(s.x) && is_finite(s.y) && !detail::same_point(s.x, s.y),
                               "bisector: points must be finite and distinct");
                   },
                   [&](const DSegment& s) {
                       require(is_finite(s.x) && is_finite(s.y) && !detail::same_point(s.x, s.y),
                               "d_segment: points must be finite and distinct");
                   },
               },
               spec);
}

/// Signed residual F(z); the locus is F = 0.
inline double residual(const UnitBall& B, const ConicSpec& spec, Vec2 z) {
    return std::visit(Overloaded{
                          [&](const EllipseFoci& s) { return B.norm(z - s.f1) + B.norm(z - s.f2) - 2.0 * s.a; },
                          [&](const EllipseLeadingCircle& s) { return B.norm(z) + B.norm(z - s.focus) - s.R; },
                          [&](const HyperbolaFoci& s) {
                              return std::abs(B.norm(z - s.f1) - B.norm(z - s.f2)) - 2.0 * s.a;
                          },
                          [&](const HyperbolaLeadingCircle& s) {
                              return std::abs(B.norm(z) - B.norm(z - s.focus)) - s.R;
                          },
                          [&](const LeadingLineConic& s) {
                              return dist_point_line(B, z, s.line) - s.gamma * B.norm(z - s.focus);
                          },
                          [&](const Bisector& s) { return B.norm(z - s.x) - B.norm(z - s.y); },
                          [&](const DSegment& s) {
                              return B.norm(s.x - z) + B.norm(z - s.y) - B.norm(s.x - s.y);
                          },
                      },
                      spec);
}

/// Branch residuals (F+, F-) = (D - 2a, D + 2a) with D = ||z - f1|| - ||z - f2||.
/// F+ vanishes on the branch near f2, F- on the branch near f1.
inline std::pair<double, double> branch_residuals(const UnitBall& B, const HyperbolaFoci& s, Vec2 z) {
    const double d = B.norm(z - s.f1) - B.norm(z - s.f2);
    return {d - 2.0 * s.a, d + 2.0 * s.a};
}

/// Same split for the leading-circle hyperbola, D = ||z|| - ||z - focus||.
inline std::pair<double, double> branch_residuals(const UnitBall& B, const HyperbolaLeadingCircle& s, Vec2 z) {
    const double d = B.norm(z) - B.norm(z - s.focus);
    return {d - s.R, d + s.R};
}

/// Euclidean Lipschitz bound of the residual.
inline double residual_lipschitz(const UnitBall& B, const ConicSpec& spec) {
    const double L = B.lipschitz();
    if (const auto* s = std::get_if<LeadingLineConic>(&spec)) {
        return 1.0 / B.support(s->line.normal()) + s->gamma * L;
    }
    return 2.0 * L;
}

/// Characteristic length of the locus, used to scale brackets and windows.
inline double characteristic_size(const UnitBall& B, const ConicSpec& spec) {
    return std::visit(Overloaded{
                          [&](const EllipseFoci& s) { return std::max(2.0 * s.a, B.norm(s.f1 - s.f2)); },
                          [&](const EllipseLeadingCircle& s) { return s.R; },
                          [&](const HyperbolaFoci& s) { return std::max(2.0 * s.a, B.norm(s.f1 - s.f2)); },
                          [&](const HyperbolaLeadingCircle& s) { return B.norm(s.focus); },
                          [&](const LeadingLineConic& s) { return dist_point_line(B, s.focus, s.line); },
                          [&](const Bisector& s) { return B.norm(s.x - s.y); },
                          [&](const DSegment& s) { return B.norm(s.x - s.y); },
                      },
                      spec);
}

/// True when the Interior side of the spec has F > 0.
inline bool interior_is_positive(const ConicSpec& spec) { return std::holds_alternative<LeadingLineConic>(spec); }

inline Membership membership(const UnitBall& B, const ConicSpec& spec, Vec2 z, double tol = kGeomTol) {
    const double f = residual(B, spec, z);
    if (std::abs(f) <= tol) return Membership::On;
    const bool positive = f > 0.0;
    return positive == interior_is_positive(spec) ? Membership::Interior : Membership::Exterior;
}

/// Direct leading-circle definition: with eps = ||z - focus||, the disk
/// z + eps K must touch R K (internally for the ellipse, either way for the
/// hyperbola). Kept independent of the reduced residual.
inline bool tangency_membership_leading_circle(const UnitBall& B, const ConicSpec& spec, Vec2 z,
                                               double tol = kGeomTol) {
    if (const auto* e = std::get_if<EllipseLeadingCircle>(&spec)) {
        const double eps = B.norm(z - e->focus);
        if (!(eps > 0.0)) return false;
        return disks_tangency(B, z, eps, Vec2{0.0, 0.0}, e->R, tol) == Tangency::Internal;
    }
    if (const auto* h = std::get_if<HyperbolaLeadingCircle>(&spec)) {
        const double eps = B.norm(z - h->focus);
        if (!(eps > 0.0)) return false;
        return disks_tangency(B, z, eps, Vec2{0.0, 0.0}, h->R, tol) != Tangency::None;
    }
    throw InvalidInput("tangency_membership_leading_circle: spec must be a leading-circle conic");
}

/// Signed tangency defect used when tracing the direct definition: the
/// relevant tangency gap between z + eps K and the leading circle.
inline double leading_circle_tangency_defect(const UnitBall& B, const EllipseLeadingCircle& s, Vec2 z) {
    const double eps = B.norm(z - s.focus);
    return tangency_gaps(B, z, eps, Vec2{0.0, 0.0}, s.R).internal;
}

inline Degeneracy classify_degeneracy(const UnitBall& B, const ConicSpec& spec) {
    auto compare = [](double two_a, double two_c) {
        const double tol = 1e-12 * std::max(1.0, two_c);
        if (std::abs(two_a - two_c) <= tol) return 0;
        return two_a < two_c ? -1 : 1;
    };
    return std::visit(Overloaded{
                          [&](const EllipseFoci& s) {
                              const int c = compare(2.0 * s.a, B.norm(s.f1 - s.f2));
                              if (c == 0) return Degeneracy::DSegmentSet;
                              return c < 0 ? Degeneracy::Empty : Degeneracy::Nondegenerate;
                          },
                          [&](const HyperbolaFoci& s) {
                              if (s.a == 0.0) return Degeneracy::BisectorSet;
                              const int c = compare(2.0 * s.a, B.norm(s.f1 - s.f2));
                              if (c == 0) return Degeneracy::RaysOrCones;
                              return c > 0 ? Degeneracy::Empty : Degeneracy::Nondegenerate;
                          },
                          [&](const Bisector&) { return Degeneracy::BisectorSet; },
                          [&](const DSegment&) { return Degeneracy::DSegmentSet; },
                          [&](const auto&) { return Degeneracy::Nondegenerate; },
                      },
                      spec);
}

}  // namespace mink
