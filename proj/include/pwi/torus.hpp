#pragma once

// Points on the unit torus [0,1)^d and the translation-invariant metric
// family rho_p, for both exact rational and double coordinates.
//
// Flat distance:   trho_p(x,y) = (sum_i |x_i-y_i|^p)^(1/p)
// Torus distance:  rho_p(x,y)  = min over integer offsets z of trho_p(x-z,y)
//
// For points already reduced into the fundamental domain the minimum is
// attained with offsets in {-1,0,1}^d, which keeps the exact computation
// finite.

#include "pwi/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pwi {

using NumVec = std::vector<double>;

/// p in {1, 2, ...} or the uniform metric (p = infinity).
struct MetricIndex {
    int p = 2;
    bool infinite = false;

    static MetricIndex inf() { return {0, true}; }
    static MetricIndex lp(int p) {
        if (p < 1) throw std::invalid_argument("MetricIndex: p must be >= 1");
        return {p, false};
    }
};

// Numeric mod-1 reduction snaps values within 1e-12 of an integer boundary
// down to 0 so that itineraries near region faces stay stable.
inline constexpr double kMod1Snap = 1e-12;

inline double reduce_mod1_scalar(double x) {
    if (!std::isfinite(x)) throw std::domain_error("reduce_mod1: non-finite input");
    double y = x - std::floor(x);
    if (y >= 1.0 - kMod1Snap || y < kMod1Snap) y = 0.0;
    return y;
}

inline NumVec reduce_mod1(const NumVec& v) {
    NumVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = reduce_mod1_scalar(v[i]);
    return out;
}

inline ExactVec reduce_mod1(const ExactVec& v) {
    ExactVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod1(v[i]);
    return out;
}

namespace detail {

/// Visits all offset vectors in {lo..hi}^d.
template <typename F>
void for_each_offset(int dim, int lo, int hi, F&& f) {
    std::vector<int> z(dim, lo);
    while (true) {
        f(z);
        int k = 0;
        while (k < dim && ++z[k] > hi) z[k++] = lo;
        if (k == dim) break;
    }
}

inline double flat_pow_dist(const NumVec& a, const NumVec& b, const std::vector<int>& z,
                            const MetricIndex& m) {
    double acc = m.infinite ? 0.0 : 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - z[i] - b[i]);
        if (m.infinite)
            acc = std::max(acc, d);
        else
            acc += std::pow(d, m.p);
    }
    return acc;
}

inline Rat flat_pow_dist(const ExactVec& a, const ExactVec& b, const std::vector<int>& z,
                         const MetricIndex& m) {
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat d = a[i] - Rat(z[i]) - b[i];
        if (d < 0) d = -d;
        if (m.infinite) {
            if (d > acc) acc = d;
        } else {
            Rat t = d;
            for (int k = 1; k < m.p; ++k) t *= d;
            acc += t;
        }
    }
    return acc;
}

}  // namespace detail

/// Minimum of |x - z - y|^p (or the sup-norm) over offsets z in {lo..hi}^d.
/// Exact version; the p-th root is left to the caller.
inline Rat torus_dist_pow(const ExactVec& x, const ExactVec& y, const MetricIndex& m,
                          int lo = -1, int hi = 1) {
    if (x.size() != y.size()) throw std::invalid_argument("torus_dist: dimension mismatch");
    bool first = true;
    Rat best = 0;
    detail::for_each_offset(static_cast<int>(x.size()), lo, hi, [&](const std::vector<int>& z) {
        Rat d = detail::flat_pow_dist(x, y, z, m);
        if (first || d < best) { best = d; first = false; }
    });
    return best;
}

inline double torus_distance(const NumVec& x, const NumVec& y, const MetricIndex& m = {},
                             int lo = -1, int hi = 1) {
    if (x.size() != y.size()) throw std::invalid_argument("torus_distance: dimension mismatch");
    double best = std::numeric_limits<double>::infinity();
    detail::for_each_offset(static_cast<int>(x.size()), lo, hi, [&](const std::vector<int>& z) {
        best = std::min(best, detail::flat_pow_dist(x, y, z, m));
    });
    return m.infinite ? best : std::pow(best, 1.0 / m.p);
}

inline double torus_distance(const ExactVec& x, const ExactVec& y, const MetricIndex& m = {},
                             int lo = -1, int hi = 1) {
    Rat best = torus_dist_pow(x, y, m, lo, hi);
    double b = to_double(best);
    return m.infinite ? b : std::pow(b, 1.0 / m.p);
}

inline NumVec to_numeric(const ExactVec& v) {
    NumVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

}  // namespace pwi
