#pragma once

// Piecewise isometries of the torus: a partition (or rule locator) plus one
// local isometry per region. Exact systems drive the measure engine; numeric
// systems drive the orbit/grid simulators. Exact systems convert to numeric
// ones; general affine numeric maps (rotations) exist only on the numeric
// side.

#include "pwi/isometry.hpp"
#include "pwi/partition.hpp"

#include <cmath>
#include <functional>
#include <utility>

namespace pwi {

// ---------------------------------------------------------------------------
// Numeric affine maps x -> M x + t mod 1 (M is any d x d matrix; for the
// systems built here it is orthogonal on each cell).

struct AffineMap {
    int dim = 0;
    std::vector<double> m;  // row-major d*d
    NumVec t;

    static AffineMap identity(int d) {
        AffineMap a;
        a.dim = d;
        a.m.assign(d * d, 0.0);
        for (int i = 0; i < d; ++i) a.m[i * d + i] = 1.0;
        a.t.assign(d, 0.0);
        return a;
    }

    NumVec plane_apply(const NumVec& x) const {
        NumVec y(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            double acc = t[i];
            for (int j = 0; j < dim; ++j) acc += m[i * dim + j] * x[j];
            y[i] = acc;
        }
        return y;
    }

    NumVec operator()(const NumVec& x) const { return reduce_mod1(plane_apply(x)); }

    bool is_identity(double tol = 0.0) const {
        AffineMap id = identity(dim);
        for (int i = 0; i < dim * dim; ++i)
            if (std::abs(m[i] - id.m[i]) > tol) return false;
        for (int i = 0; i < dim; ++i)
            if (std::abs(t[i]) > tol) return false;
        return true;
    }
};

inline AffineMap to_affine(const TorusIsometry& g) {
    AffineMap a = AffineMap::identity(g.dim());
    std::fill(a.m.begin(), a.m.end(), 0.0);
    for (int i = 0; i < g.dim(); ++i) {
        a.m[i * g.dim() + g.m.col[i]] = g.m.sign[i];
        a.t[i] = to_double(g.t[i]);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Exact systems

struct ExactPwi {
    int dim = 1;
    Partition partition;
    std::vector<TorusIsometry> maps;                    // per region (explicit)
    std::function<TorusIsometry(int)> map_rule;         // per index (locator)
    MetricIndex metric;

    bool explicit_mode() const { return partition.explicit_mode(); }

    TorusIsometry map_for(int idx) const {
        if (explicit_mode()) {
            if (idx < 0 || idx >= static_cast<int>(maps.size()))
                throw ConfigError("ExactPwi: map index out of range");
            return maps[idx];
        }
        return map_rule(idx);
    }

    std::pair<int, ExactVec> step(const ExactVec& x) const {
        int idx = partition.locate(x);
        return {idx, map_for(idx)(reduce_mod1(x))};
    }

    ExactVec apply(const ExactVec& x) const { return step(x).second; }

    /// Distinct local maps, in first-appearance order (explicit mode).
    GeneratorSet generators() const {
        if (!explicit_mode()) throw ConfigError("ExactPwi: generators need explicit regions");
        std::vector<TorusIsometry> gens;
        for (const auto& g : maps) {
            bool known = false;
            for (const auto& h : gens)
                if (h == g) { known = true; break; }
            if (!known) gens.push_back(g);
        }
        return make_generators(std::move(gens));
    }
};

inline ExactPwi make_exact_pwi(int dim, Partition part, std::vector<TorusIsometry> maps,
                               MetricIndex metric = {}) {
    if (part.explicit_mode() && part.size() != maps.size())
        throw ConfigError("ExactPwi: one local map per region required");
    ExactPwi s;
    s.dim = dim;
    s.partition = std::move(part);
    s.maps = std::move(maps);
    s.metric = metric;
    return s;
}

// ---------------------------------------------------------------------------
// Numeric systems

struct NumRegion {
    int dim = 1;
    Interval<double> iv;
    Poly<double> poly;
    std::vector<bool> edge_in, vert_in;

    bool contains(const NumVec& x) const {
        if (dim == 1) {
            for (int z = -1; z <= 1; ++z)
                if (iv.contains(x[0] + z)) return true;
            return false;
        }
        for (int zx = -1; zx <= 1; ++zx)
            for (int zy = -1; zy <= 1; ++zy)
                if (poly_contains_flagged(poly, edge_in, vert_in,
                                          Pt2<double>{x[0] + zx, x[1] + zy}))
                    return true;
        return false;
    }
};

struct NumericPwi {
    int dim = 1;
    MetricIndex metric;

    std::vector<NumRegion> regions;  // explicit mode
    std::vector<AffineMap> maps;

    std::string locator_name;  // non-empty <=> rule locator
    std::function<int(const NumVec&)> locator;
    std::function<AffineMap(int)> map_rule;

    // Optional geometry for rendering and clearance computations.
    std::vector<Seg2<double>> boundary_segments;  // d = 2
    std::vector<double> boundary_points;          // d = 1

    bool explicit_mode() const { return locator_name.empty(); }

    int locate(const NumVec& x) const {
        NumVec r = reduce_mod1(x);
        if (!explicit_mode()) {
            int idx = locator(r);
            if (idx < 0) throw ConfigError("NumericPwi: locator returned no index");
            return idx;
        }
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].contains(r)) return static_cast<int>(i);
        throw ConfigError("NumericPwi: point not claimed by any region");
    }

    AffineMap map_for(int idx) const {
        if (explicit_mode() || !maps.empty()) {
            if (idx < 0 || idx >= static_cast<int>(maps.size()))
                throw ConfigError("NumericPwi: map index out of range");
            return maps[idx];
        }
        return map_rule(idx);
    }

    std::pair<int, NumVec> step(const NumVec& x) const {
        NumVec r = reduce_mod1(x);
        int idx = locate(r);
        return {idx, map_for(idx)(r)};
    }

    NumVec apply(const NumVec& x) const { return step(x).second; }
};

inline NumRegion to_numeric(const Region& r) {
    NumRegion n;
    n.dim = r.dim;
    if (r.dim == 1) {
        n.iv = {to_double(r.iv.lo), to_double(r.iv.hi), r.iv.lo_closed, r.iv.hi_closed};
    } else {
        for (const auto& v : r.poly) n.poly.push_back({to_double(v[0]), to_double(v[1])});
        n.edge_in = r.edge_in;
        n.vert_in = r.vert_in;
    }
    return n;
}

inline NumericPwi to_numeric(const ExactPwi& s) {
    NumericPwi n;
    n.dim = s.dim;
    n.metric = s.metric;
    if (s.explicit_mode()) {
        for (const auto& r : s.partition.regions) n.regions.push_back(to_numeric(r));
        for (const auto& g : s.maps) n.maps.push_back(to_affine(g));
        BoundarySet b = boundary_set(s.partition);
        if (s.dim == 1)
            for (const auto& pt : b.points) n.boundary_points.push_back(to_double(pt));
        else
            for (const auto& seg : b.segments)
                n.boundary_segments.push_back(
                    {Pt2<double>{to_double(seg[0][0]), to_double(seg[0][1])},
                     Pt2<double>{to_double(seg[1][0]), to_double(seg[1][1])}});
    } else {
        n.locator_name = s.partition.locator_name;
        n.locator = s.partition.locator_numeric;
        auto rule = s.map_rule;
        n.map_rule = [rule](int idx) { return to_affine(rule(idx)); };
    }
    return n;
}

/// Distance from a numeric point to the system's boundary set (torus metric,
/// rho_2). Returns +inf when the system carries no boundary geometry.
inline double distance_to_boundary(const NumericPwi& sys, const NumVec& x) {
    double best = std::numeric_limits<double>::infinity();
    NumVec r = reduce_mod1(x);
    if (sys.dim == 1) {
        for (double b : sys.boundary_points)
            best = std::min(best, torus_distance(r, NumVec{b}));
        return best;
    }
    for (const auto& seg : sys.boundary_segments) {
        // try all torus representatives of the segment near r
        for (int zx = -1; zx <= 1; ++zx)
            for (int zy = -1; zy <= 1; ++zy) {
                double ax = seg[0][0] + zx, ay = seg[0][1] + zy;
                double bx = seg[1][0] + zx, by = seg[1][1] + zy;
                double vx = bx - ax, vy = by - ay;
                double len2 = vx * vx + vy * vy;
                double t = len2 == 0.0 ? 0.0
                                       : ((r[0] - ax) * vx + (r[1] - ay) * vy) / len2;
                t = std::clamp(t, 0.0, 1.0);
                double dx = r[0] - (ax + t * vx), dy = r[1] - (ay + t * vy);
                best = std::min(best, std::sqrt(dx * dx + dy * dy));
            }
    }
    return best;
}

}  // namespace pwi
