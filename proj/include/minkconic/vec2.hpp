#pragma once

#include <cmath>
#include <cstdint>

namespace mink {

/// Point or vector of the plane.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise rotation by a quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline double euclid_norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double euclid_dist(Vec2 a, Vec2 b) { return euclid_norm(a - b); }
inline Vec2 euclid_unit(Vec2 v) { return v / euclid_norm(v); }
inline Vec2 unit_at_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Euclidean distance from `p` to the closed segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return euclid_dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return euclid_dist(p, a + ab * t);
}

/// Deterministic uniform stream on top of a 64-bit generator. The mapping
/// from raw bits to doubles is fixed here so reports are reproducible across
/// standard library implementations.
template <class Engine>
double uniform01(Engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Engine>
double uniform(Engine& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace mink
