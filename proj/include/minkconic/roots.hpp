#pragma once

// One-dimensional root finding and minimization used by the tracers,
// the Birkhoff test and the s.i.p. zero-direction scan.

#include <algorithm>
#include <cmath>
#include <vector>

namespace mink {

/// Default tolerances. Root finding works in parameter space, geometric
/// equality in model units.
inline constexpr double kRootTol = 1e-10;
inline constexpr double kGeomTol = 1e-6;

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one
/// is zero). Returns the endpoint of the final bracket with the smaller |f|.
template <class F>
double bisect(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int i = 0; i < max_iter && std::abs(hi - lo) > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

/// Boundary of a predicate: `inside(a)` is true, `inside(b)` is false.
/// Returns a point of the final bracket where the predicate holds.
template <class P>
double bisect_predicate(P&& inside, double a, double b, double tol, int max_iter = 200) {
    for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        if (inside(mid)) a = mid; else b = mid;
    }
    return a;
}

struct MinResult {
    double arg;
    double value;
};

/// Golden-section search for the minimum of a convex (or unimodal) function.
template <class F>
MinResult golden_section_min(F&& f, double lo, double hi, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > width) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            if (c == d) break;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            if (c == d) break;
            fd = f(d);
        }
    }
    MinResult best{c, fc};
    if (fd < best.value) best = {d, fd};
    const double fl = f(lo);
    const double fh = f(hi);
    if (fl < best.value) best = {lo, fl};
    if (fh < best.value) best = {hi, fh};
    return best;
}

/// A zero of a scanned function: a point (lo == hi) or a closed interval on
/// which the function vanishes within the zero tolerance.
struct RootHit {
    double lo;
    double hi;
    bool is_interval() const { return hi > lo; }
};

struct ScanOptions {
    int stations = 512;
    /// |f| at or below this counts as zero (plateau detection).
    double zero_tol = 1e-12;
    /// Bisection width.
    double tol = kRootTol;
    /// Point roots closer than this are merged.
    double merge_tol = 1e-7;
};

/// All zeros of f on [t0, t1]: dense sampling, then bisection on every sign
/// change; consecutive stations inside the zero band become intervals whose
/// ends are refined against the neighbouring nonzero stations.
template <class F>
std::vector<RootHit> scan_roots(F&& f, double t0, double t1, const ScanOptions& opt) {
    const int n = opt.stations < 2 ? 2 : opt.stations;
    std::vector<double> ts(n);
    std::vector<double> vs(n);
    for (int i = 0; i < n; ++i) {
        ts[i] = (i == n - 1) ? t1 : t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
        vs[i] = f(ts[i]);
    }
    auto is_zero = [&](double v) { return std::abs(v) <= opt.zero_tol; };
    auto zero_at = [&](double t) { return is_zero(f(t)); };

    std::vector<RootHit> hits;
    int i = 0;
    while (i < n) {
        if (is_zero(vs[i])) {
            int j = i;
            while (j + 1 < n && is_zero(vs[j + 1])) ++j;
            double lo = ts[i];
            double hi = ts[j];
            if (i > 0) lo = bisect_predicate(zero_at, ts[i], ts[i - 1], opt.tol);
            if (j + 1 < n) hi = bisect_predicate(zero_at, ts[j], ts[j + 1], opt.tol);
            if (j == i && hi - lo <= opt.merge_tol) {
                hits.push_back({ts[i], ts[i]});
            } else {
                hits.push_back({lo, hi});
            }
            i = j + 1;
            continue;
        }
        if (i + 1 < n && !is_zero(vs[i + 1]) && ((vs[i] < 0.0) != (vs[i + 1] < 0.0))) {
            const double r = bisect(f, ts[i], ts[i + 1], opt.tol);
            hits.push_back({r, r});
        }
        ++i;
    }

    std::vector<RootHit> merged;
    for (const RootHit& h : hits) {
        if (!merged.empty() && h.lo - merged.back().hi <= opt.merge_tol) {
            merged.back().hi = std::max(merged.back().hi, h.hi);
        } else {
            merged.push_back(h);
        }
    }
    return merged;
}

}  // namespace mink
