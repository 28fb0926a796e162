#pragma once

// Semi-inner products of the smooth strictly convex planes l_p, 1 < p < inf:
//
//   [y, x] = ||x||^(2-p) * sum_i y_i |x_i|^(p-1) sgn(x_i)
//
// with duality map J (the Euclidean representer of [., x]), its closed-form
// inverse through the dual exponent, the generalized adjoint
// A^T(y) = J^-1(E^T J(y)) and the projective conic {x : [Ax, x] = 0}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "minkconic/error.hpp"
#include "minkconic/roots.hpp"
#include "minkconic/unit_ball.hpp"

namespace mink {

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct LinearMap2 {
    double a = 1, b = 0, c = 0, d = 1;

    static LinearMap2 identity() { return {}; }
    static LinearMap2 diag(double x, double y) { return {x, 0, 0, y}; }
    static LinearMap2 rotation(double theta) {
        return {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)};
    }

    Vec2 operator()(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    LinearMap2 transpose() const { return {a, c, b, d}; }
    double det() const { return a * d - b * c; }
    bool finite() const { return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d); }

    friend LinearMap2 operator*(const LinearMap2& m, const LinearMap2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend LinearMap2 operator*(double s, const LinearMap2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

    /// Euclidean operator norm (largest singular value).
    double op_norm() const {
        const double s = a * a + b * b + c * c + d * d;
        const double dt = det();
        return std::sqrt(0.5 * (s + std::sqrt(std::max(0.0, s * s - 4.0 * dt * dt))));
    }
    double max_abs() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }
};

class SipSpace {
public:
    explicit SipSpace(const UnitBall& ball) : ball_(ball) {
        if (!ball.is_lp() || ball.is_lp_infinity() || !(ball.p() > 1.0) || !std::isfinite(ball.p())) {
            throw InvalidInput("semi-inner product space requires l_p with 1 < p < inf, got " + ball.describe());
        }
        p_ = ball.p();
        q_ = p_ / (p_ - 1.0);
    }
    static SipSpace lp(double p) { return SipSpace(UnitBall::lp(p)); }

    const UnitBall& ball() const { return ball_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double norm(Vec2 v) const { return ball_.norm(v); }
    double dual_norm(Vec2 v) const { return lp_norm(v, q_); }

private:
    static double lp_norm(Vec2 v, double r) {
        const double m = std::max(std::abs(v.x), std::abs(v.y));
        if (m == 0.0) return 0.0;
        return m * std::pow(std::pow(std::abs(v.x) / m, r) + std::pow(std::abs(v.y) / m, r), 1.0 / r);
    }

    UnitBall ball_;
    double p_ = 2.0;
    double q_ = 2.0;
};

namespace detail {

inline double signed_pow(double t, double e) { return std::copysign(std::pow(std::abs(t), e), t); }

}  // namespace detail

/// J(x) = ||x||_p * (sgn(u_i) |u_i|^(p-1)) with u = x / ||x||_p.
inline Vec2 duality_map(const SipSpace& S, Vec2 x) {
    const double nx = S.norm(x);
    if (!(nx > 0.0)) throw InvalidInput("duality_map: zero vector");
    const Vec2 u = x / nx;
    return Vec2{detail::signed_pow(u.x, S.p() - 1.0), detail::signed_pow(u.y, S.p() - 1.0)} * nx;
}

/// Inverse of J: the l_q duality map.
inline Vec2 inverse_duality(const SipSpace& S, Vec2 phi) {
    const double nf = S.dual_norm(phi);
    if (!(nf > 0.0)) throw InvalidInput("inverse_duality: zero functional");
    const Vec2 w = phi / nf;
    return Vec2{detail::signed_pow(w.x, S.q() - 1.0), detail::signed_pow(w.y, S.q() - 1.0)} * nf;
}

/// [y, x]; zero for x = 0.
inline double sip(const SipSpace& S, Vec2 y, Vec2 x) {
    if (x.x == 0.0 && x.y == 0.0) return 0.0;
    return dot(y, duality_map(S, x));
}

/// w with [A x, y] = [x, w] for every x. Zero when E^T J(y) vanishes
/// (singular A).
inline Vec2 generalized_adjoint(const SipSpace& S, const LinearMap2& A, Vec2 y) {
    if (y.x == 0.0 && y.y == 0.0) throw InvalidInput("generalized_adjoint: zero vector");
    const Vec2 phi = A.transpose()(duality_map(S, y));
    if (phi.x == 0.0 && phi.y == 0.0) return {0.0, 0.0};
    return inverse_duality(S, phi);
}

/// Directions used by the self-adjointness test: `samples` equally spaced
/// angles plus `samples` seeded random ones.
inline std::vector<Vec2> adjoint_test_directions(int samples, std::uint64_t seed) {
    std::vector<Vec2> dirs;
    dirs.reserve(2 * static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) dirs.push_back(unit_at_angle(2.0 * std::numbers::pi * k / samples));
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) dirs.push_back(unit_at_angle(uniform(rng, 0.0, 2.0 * std::numbers::pi)));
    return dirs;
}

/// max over sampled norm-unit y of ||A y - A^T(y)||_p.
inline double self_adjoint_defect(const SipSpace& S, const LinearMap2& A, int samples = 256,
                                  std::uint64_t seed = 0x5eedULL) {
    double worst = 0.0;
    for (Vec2 u : adjoint_test_directions(samples, seed)) {
        const Vec2 y = u / S.norm(u);
        worst = std::max(worst, S.norm(A(y) - generalized_adjoint(S, A, y)));
    }
    return worst;
}

inline bool is_self_adjoint(const SipSpace& S, const LinearMap2& A, int samples = 256, double tol = 1e-9,
                            std::uint64_t seed = 0x5eedULL) {
    if (!A.finite()) throw InvalidInput("is_self_adjoint: non-finite matrix");
    return self_adjoint_defect(S, A, samples, seed) <= tol * (1.0 + A.op_norm());
}

/// Zero set of Q(theta) = [A u, u], u = (cos theta, sin theta), over
/// [0, pi): isolated directions plus whole arcs where Q vanishes identically.
struct ConicZeros {
    std::vector<double> angles;
    std::vector<std::pair<double, double>> arcs;
};

inline ConicZeros projective_conic_zeros(const SipSpace& S, const LinearMap2& A, int n = 4096,
                                         double tol = 1e-13) {
    if (!A.finite()) throw InvalidInput("projective_conic_zeros: non-finite matrix");
    if (std::abs(A.det()) <= 1e-14 * A.max_abs() * A.max_abs() || A.max_abs() == 0.0) {
        throw InvalidInput("projective_conic_zeros: singular map");
    }
    auto Q = [&](double t) {
        const Vec2 u = unit_at_angle(t);
        return sip(S, A(u), u);
    };
    ScanOptions opt;
    opt.stations = std::max(n, 8);
    opt.tol = tol;
    opt.zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * A.op_norm();
    opt.merge_tol = 1e-9;
    ConicZeros out;
    const double pi = std::numbers::pi;
    for (const RootHit& h : scan_roots(Q, 0.0, pi, opt)) {
        if (h.is_interval()) {
            out.arcs.emplace_back(h.lo, std::min(h.hi, pi));
        } else if (h.lo < pi - 1e-12) {
            out.angles.push_back(h.lo);
        } else if (out.angles.empty() || out.angles.front() > 1e-12) {
            // theta = pi is the direction theta = 0.
            out.angles.insert(out.angles.begin(), 0.0);
        }
    }
    return out;
}

struct NonlinearityWitness {
    Vec2 y1;
    Vec2 y2;
    /// ||A^T(y1 + y2) - A^T(y1) - A^T(y2)||_p
    double defect = 0.0;
};

/// Seeded random search for the largest additivity defect of A^T.
inline NonlinearityWitness adjoint_nonlinearity_witness(const SipSpace& S, const LinearMap2& A, int tries = 2000,
                                                        std::uint64_t seed = 0x5eedULL) {
    std::mt19937_64 rng(seed);
    NonlinearityWitness best;
    for (int k = 0; k < tries; ++k) {
        const Vec2 y1 = unit_at_angle(uniform(rng, 0.0, 2.0 * std::numbers::pi));
        const Vec2 y2 = unit_at_angle(uniform(rng, 0.0, 2.0 * std::numbers::pi));
        const Vec2 s = y1 + y2;
        if (euclid_norm(s) < 1e-6) continue;
        const double d = S.norm(generalized_adjoint(S, A, s) - generalized_adjoint(S, A, y1) -
                                generalized_adjoint(S, A, y2));
        if (d > best.defect) best = {y1, y2, d};
    }
    return best;
}

/// A == B * B entrywise within tol * (1 + max|A|).
inline bool is_square_of(const LinearMap2& A, const LinearMap2& B, double tol = 1e-12) {
    const LinearMap2 s = B * B;
    const LinearMap2 diff{A.a - s.a, A.b - s.b, A.c - s.c, A.d - s.d};
    return diff.max_abs() <= tol * (1.0 + A.max_abs());
}

}  // namespace mink
