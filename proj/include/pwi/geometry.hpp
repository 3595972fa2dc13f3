#pragma once

// Small convex geometry kit, templated so the same code runs on exact
// rationals (partition refinement, measures) and on doubles (rotation cells,
// rendering). Polygons are convex, counterclockwise, without collinear
// vertices. There are no floating-point predicates on the exact path; every
// comparison is a field operation on Rat.

#include "pwi/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace pwi {

template <typename T>
using Pt2 = std::array<T, 2>;

template <typename T>
using Poly = std::vector<Pt2<T>>;

template <typename T>
using Seg2 = std::array<Pt2<T>, 2>;

inline long long floor_ll(const Rat& r) { return rat_floor(r).convert_to<long long>(); }
inline long long floor_ll(double r) { return static_cast<long long>(std::floor(r)); }

template <typename T>
T cross(const Pt2<T>& o, const Pt2<T>& a, const Pt2<T>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Signed area (positive when counterclockwise).
template <typename T>
T poly_area(const Poly<T>& p) {
    T acc(0);
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        const auto& a = p[i];
        const auto& b = p[(i + 1) % n];
        acc += a[0] * b[1] - b[0] * a[1];
    }
    return acc / T(2);
}

template <typename T>
void ensure_ccw(Poly<T>& p) {
    if (poly_area(p) < T(0)) std::reverse(p.begin(), p.end());
}

/// Drops repeated and collinear vertices.
template <typename T>
Poly<T> simplify(const Poly<T>& p) {
    Poly<T> q;
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        if (p[i] != p[(i + 1) % n]) q.push_back(p[i]);
    if (q.size() < 3) return q;
    Poly<T> r;
    n = static_cast<int>(q.size());
    for (int i = 0; i < n; ++i) {
        const auto& prev = q[(i + n - 1) % n];
        const auto& next = q[(i + 1) % n];
        if (cross(prev, q[i], next) != T(0)) r.push_back(q[i]);
    }
    return r;
}

/// Clips a convex polygon by the half-plane {x : n.x <= c}.
template <typename T>
Poly<T> clip_halfplane(const Poly<T>& p, const Pt2<T>& n, const T& c) {
    Poly<T> out;
    int m = static_cast<int>(p.size());
    for (int i = 0; i < m; ++i) {
        const Pt2<T>& a = p[i];
        const Pt2<T>& b = p[(i + 1) % m];
        T fa = n[0] * a[0] + n[1] * a[1] - c;
        T fb = n[0] * b[0] + n[1] * b[1] - c;
        bool ina = fa <= T(0), inb = fb <= T(0);
        if (ina) out.push_back(a);
        if (ina != inb) {
            T t = fa / (fa - fb);  // fa != fb since the signs differ
            out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    return simplify(out);
}

/// Intersection of two convex CCW polygons (empty when degenerate).
template <typename T>
Poly<T> poly_intersect(const Poly<T>& p, const Poly<T>& q) {
    Poly<T> r = p;
    int n = static_cast<int>(q.size());
    for (int i = 0; i < n && r.size() >= 3; ++i) {
        const Pt2<T>& a = q[i];
        const Pt2<T>& b = q[(i + 1) % n];
        // interior of a CCW polygon lies left of a->b; outward normal (dy, -dx)
        Pt2<T> nrm{b[1] - a[1], a[0] - b[0]};
        T c = nrm[0] * a[0] + nrm[1] * a[1];
        r = clip_halfplane(r, nrm, c);
    }
    return r.size() >= 3 ? r : Poly<T>{};
}

/// Outward normal of CCW edge i (not normalized).
template <typename T>
Pt2<T> edge_outward_normal(const Poly<T>& p, int i) {
    int n = static_cast<int>(p.size());
    const auto& a = p[i];
    const auto& b = p[(i + 1) % n];
    return {b[1] - a[1], a[0] - b[0]};
}

template <typename T>
bool lex_negative(const Pt2<T>& v) {
    if (v[0] != T(0)) return v[0] < T(0);
    return v[1] < T(0);
}

template <typename T>
Pt2<T> poly_centroid(const Poly<T>& p) {
    Pt2<T> c{T(0), T(0)};
    for (const auto& v : p) { c[0] += v[0]; c[1] += v[1]; }
    T n(static_cast<int>(p.size()));
    return {c[0] / n, c[1] / n};
}

enum class Side { Inside, Boundary, Outside };

template <typename T>
Side poly_side(const Poly<T>& p, const Pt2<T>& x) {
    bool on_edge = false;
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        T c = cross(p[i], p[(i + 1) % n], x);
        if (c < T(0)) return Side::Outside;
        if (c == T(0)) on_edge = true;
    }
    return on_edge ? Side::Boundary : Side::Inside;
}

/// Half-open membership: boundary points are claimed according to per-edge
/// and per-vertex inclusion flags.
template <typename T>
bool poly_contains_flagged(const Poly<T>& p, const std::vector<bool>& edge_in,
                           const std::vector<bool>& vert_in, const Pt2<T>& x) {
    int n = static_cast<int>(p.size());
    int zero_edge = -1;
    int zero_count = 0;
    for (int i = 0; i < n; ++i) {
        T c = cross(p[i], p[(i + 1) % n], x);
        if (c < T(0)) return false;
        if (c == T(0)) { ++zero_count; zero_edge = i; }
    }
    if (zero_count == 0) return true;
    for (int i = 0; i < n; ++i)
        if (x == p[i]) return vert_in[i];
    // Otherwise x lies on the interior of exactly one edge: on a convex
    // polygon two zero crossings force a vertex match handled above.
    return edge_in[zero_edge];
}

/// Default half-open convention: keep the faces whose outward normal is
/// lexicographically negative ("lower-left"), and the vertices where both
/// adjacent kept faces meet. Cells of any tiling flagged this way claim
/// every boundary point exactly once.
template <typename T>
void default_flags(const Poly<T>& p, std::vector<bool>& edge_in, std::vector<bool>& vert_in) {
    int n = static_cast<int>(p.size());
    edge_in.assign(n, false);
    vert_in.assign(n, false);
    for (int i = 0; i < n; ++i) edge_in[i] = lex_negative(edge_outward_normal(p, i));
    for (int i = 0; i < n; ++i) vert_in[i] = edge_in[(i + n - 1) % n] && edge_in[i];
}

/// Splits a polygon with vertices anywhere in the plane into its mod-1
/// pieces translated back into [0,1]^2. Zero-area slivers are dropped.
template <typename T>
std::vector<Poly<T>> wrap_mod1(const Poly<T>& p) {
    T xmin = p[0][0], xmax = p[0][0], ymin = p[0][1], ymax = p[0][1];
    for (const auto& v : p) {
        xmin = std::min(xmin, v[0]); xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]); ymax = std::max(ymax, v[1]);
    }
    std::vector<Poly<T>> out;
    for (long long kx = floor_ll(xmin); T(kx) < xmax; ++kx)
        for (long long ky = floor_ll(ymin); T(ky) < ymax; ++ky) {
            Poly<T> box{{T(kx), T(ky)}, {T(kx + 1), T(ky)},
                        {T(kx + 1), T(ky + 1)}, {T(kx), T(ky + 1)}};
            Poly<T> piece = poly_intersect(p, box);
            if (piece.size() >= 3 && poly_area(piece) > T(0)) {
                for (auto& v : piece) { v[0] -= T(kx); v[1] -= T(ky); }
                out.push_back(piece);
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Intervals (the d = 1 regions)

template <typename T>
struct Interval {
    T lo{}, hi{};
    bool lo_closed = true, hi_closed = false;

    T length() const { return hi - lo; }
    T midpoint() const { return (lo + hi) / T(2); }

    bool contains(const T& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo) return lo_closed;
        if (x == hi) return hi_closed;
        return true;
    }
};

/// Length of the overlap of [a,b] and [c,d].
template <typename T>
T overlap_length(const T& a, const T& b, const T& c, const T& d) {
    T lo = std::max(a, c), hi = std::min(b, d);
    return hi > lo ? hi - lo : T(0);
}

}  // namespace pwi
