#pragma once

// Special partitions of the torus (d = 1 or 2) and their boundary machinery:
// validation, half-open point location, the boundary set Gamma, pullbacks
// g^{-1}(Gamma), and the refinement of the torus by a finite semigroup into
// the regions Y_j on which itineraries are constant.
//
// Explicit partitions carry exact rational regions. Countable families are
// represented by rule locators instead and are excluded from exact
// refinement (their boundary sets are infinite).

#include "pwi/errors.hpp"
#include "pwi/geometry.hpp"
#include "pwi/semigroup.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace pwi {

// ---------------------------------------------------------------------------
// Regions

struct Region {
    int dim = 1;

    // d = 1
    Interval<Rat> iv;

    // d = 2: convex CCW polygon with half-open face flags
    Poly<Rat> poly;
    std::vector<bool> edge_in, vert_in;

    static Region interval(const Rat& lo, const Rat& hi, bool lo_closed = true,
                           bool hi_closed = false) {
        Region r;
        r.dim = 1;
        r.iv = {lo, hi, lo_closed, hi_closed};
        if (!(r.iv.length() > 0)) throw ConfigError("Region: empty interval");
        return r;
    }

    static Region polygon(Poly<Rat> p) {
        Region r;
        r.dim = 2;
        r.poly = simplify(p);
        ensure_ccw(r.poly);
        if (r.poly.size() < 3 || !(poly_area(r.poly) > 0))
            throw ConfigError("Region: degenerate polygon");
        default_flags(r.poly, r.edge_in, r.vert_in);
        return r;
    }

    Rat measure() const { return dim == 1 ? iv.length() : poly_area(poly); }

    /// An exact interior point: midpoint (d=1) or vertex centroid (d=2).
    ExactVec sample() const {
        if (dim == 1) return {iv.midpoint()};
        auto c = poly_centroid(poly);
        return {c[0], c[1]};
    }

    /// Membership including inclusion flags; torus-aware (representatives of
    /// x shifted by {-1,0,1}^d are tried, so regions may touch the seam).
    bool contains(const ExactVec& x) const {
        if (dim == 1) {
            for (int z = -1; z <= 1; ++z)
                if (iv.contains(x[0] + z)) return true;
            return false;
        }
        for (int zx = -1; zx <= 1; ++zx)
            for (int zy = -1; zy <= 1; ++zy)
                if (poly_contains_flagged(poly, edge_in, vert_in,
                                          Pt2<Rat>{x[0] + zx, x[1] + zy}))
                    return true;
        return false;
    }

    /// Open-interior membership, torus-aware; ignores flags.
    bool contains_interior(const ExactVec& x) const {
        if (dim == 1) {
            for (int z = -1; z <= 1; ++z) {
                Rat v = x[0] + z;
                if (v > iv.lo && v < iv.hi) return true;
            }
            return false;
        }
        for (int zx = -1; zx <= 1; ++zx)
            for (int zy = -1; zy <= 1; ++zy)
                if (poly_side(poly, Pt2<Rat>{x[0] + zx, x[1] + zy}) == Side::Inside)
                    return true;
        return false;
    }
};

inline Rat region_measure(const Region& r) { return r.measure(); }
inline ExactVec interior_sample(const Region& r) { return r.sample(); }

// ---------------------------------------------------------------------------
// Boundary sets

struct BoundarySet {
    int dim = 1;
    std::vector<Rat> points;          // d = 1, sorted, unique, in [0,1)
    std::vector<Seg2<Rat>> segments;  // d = 2, inside the fundamental domain

    std::size_t size() const { return dim == 1 ? points.size() : segments.size(); }
};

namespace detail {

inline void sort_unique(std::vector<Rat>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline Seg2<Rat> canonical(Seg2<Rat> s) {
    if (s[1] < s[0]) std::swap(s[0], s[1]);
    return s;
}

inline void sort_unique(std::vector<Seg2<Rat>>& v) {
    for (auto& s : v) s = canonical(s);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Clips segment a-b to the unit box shifted by k and translates the piece
/// back into the fundamental domain.
inline std::optional<Seg2<Rat>> clip_to_cell(const Pt2<Rat>& a, const Pt2<Rat>& b,
                                             long long kx, long long ky) {
    Rat t0 = 0, t1 = 1;
    Rat d[2] = {b[0] - a[0], b[1] - a[1]};
    Rat lo[2] = {Rat(kx), Rat(ky)}, hi[2] = {Rat(kx + 1), Rat(ky + 1)};
    for (int i = 0; i < 2; ++i) {
        if (d[i] == 0) {
            if (a[i] < lo[i] || a[i] > hi[i]) return std::nullopt;
            continue;
        }
        Rat ta = (lo[i] - a[i]) / d[i], tb = (hi[i] - a[i]) / d[i];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (!(t0 < t1)) return std::nullopt;
    Pt2<Rat> p{a[0] + t0 * d[0] - kx, a[1] + t0 * d[1] - ky};
    Pt2<Rat> q{a[0] + t1 * d[0] - kx, a[1] + t1 * d[1] - ky};
    return canonical({p, q});
}

inline void append_wrapped_segment(std::vector<Seg2<Rat>>& out, const Pt2<Rat>& a,
                                   const Pt2<Rat>& b) {
    long long x0 = std::min(floor_ll(a[0]), floor_ll(b[0]));
    long long x1 = std::max(floor_ll(a[0]), floor_ll(b[0]));
    long long y0 = std::min(floor_ll(a[1]), floor_ll(b[1]));
    long long y1 = std::max(floor_ll(a[1]), floor_ll(b[1]));
    for (long long kx = x0; kx <= x1; ++kx)
        for (long long ky = y0; ky <= y1; ++ky)
            if (auto s = clip_to_cell(a, b, kx, ky)) out.push_back(*s);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Partitions

struct Partition {
    int dim = 1;
    std::vector<Region> regions;  // explicit mode

    // Rule-based locator for countable families. Indices are small
    // non-negative integers chosen by the rule.
    std::string locator_name;  // empty <=> explicit mode
    std::function<int(const ExactVec&)> locator_exact;
    std::function<int(const NumVec&)> locator_numeric;

    bool explicit_mode() const { return locator_name.empty(); }

    static Partition make_explicit(int dim, std::vector<Region> regions) {
        Partition p;
        p.dim = dim;
        p.regions = std::move(regions);
        for (const auto& r : p.regions)
            if (r.dim != dim) throw ConfigError("Partition: mixed region dimensions");
        return p;
    }

    static Partition make_locator(int dim, std::string name,
                                  std::function<int(const ExactVec&)> exact,
                                  std::function<int(const NumVec&)> numeric) {
        Partition p;
        p.dim = dim;
        p.locator_name = std::move(name);
        p.locator_exact = std::move(exact);
        p.locator_numeric = std::move(numeric);
        return p;
    }

    int locate(const ExactVec& x) const {
        ExactVec r = reduce_mod1(x);
        if (!explicit_mode()) {
            if (!locator_exact) throw ConfigError("Partition: locator has no exact rule");
            int idx = locator_exact(r);
            if (idx < 0) throw ConfigError("Partition: locator returned no index");
            return idx;
        }
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].contains(r)) return static_cast<int>(i);
        throw ConfigError("Partition: point not claimed by any region");
    }

    int locate(const NumVec& x) const {
        NumVec r = reduce_mod1(x);
        if (!explicit_mode()) {
            if (!locator_numeric) throw ConfigError("Partition: locator has no numeric rule");
            int idx = locator_numeric(r);
            if (idx < 0) throw ConfigError("Partition: locator returned no index");
            return idx;
        }
        ExactVec e(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) e[i] = parse_double_exact(r[i]);
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].contains(e)) return static_cast<int>(i);
        throw ConfigError("Partition: point not claimed by any region");
    }

    std::size_t size() const { return regions.size(); }

private:
    // Doubles are dyadic rationals, so the exact flag logic applies verbatim.
    static Rat parse_double_exact(double v) {
        Rat r;
        int exp = 0;
        double m = std::frexp(v, &exp);
        long long mant = static_cast<long long>(std::ldexp(m, 53));
        exp -= 53;
        r = Rat(Int(mant));
        if (exp > 0)
            r *= Rat(Int(1) << exp);
        else if (exp < 0)
            r /= Rat(Int(1) << -exp);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Validation

struct PartitionDiagnostics {
    bool valid = true;
    std::string error;     // "overlap", "gap", "boundary-claim"
    std::string detail;
    ExactVec witness;
    Rat total_measure = 0;
};

/// Checks pairwise interior disjointness, exact total measure 1, and that
/// the inclusion flags claim every boundary sample point exactly once.
inline PartitionDiagnostics validate_partition(const Partition& p) {
    if (!p.explicit_mode())
        throw ConfigError("validate_partition: explicit regions required");
    PartitionDiagnostics d;
    for (const auto& r : p.regions) d.total_measure += r.measure();

    auto fail = [&](std::string kind, std::string detail, ExactVec w) {
        d.valid = false;
        d.error = std::move(kind);
        d.detail = std::move(detail);
        d.witness = std::move(w);
    };

    // pairwise interior overlap
    for (std::size_t i = 0; i < p.regions.size() && d.valid; ++i)
        for (std::size_t j = i + 1; j < p.regions.size() && d.valid; ++j) {
            const Region& a = p.regions[i];
            const Region& b = p.regions[j];
            if (p.dim == 1) {
                Rat lo = std::max(a.iv.lo, b.iv.lo), hi = std::min(a.iv.hi, b.iv.hi);
                if (hi > lo)
                    fail("overlap", "regions " + std::to_string(i) + "," + std::to_string(j),
                         {(lo + hi) / 2});
            } else {
                Poly<Rat> inter = poly_intersect(a.poly, b.poly);
                if (!inter.empty() && poly_area(inter) > 0) {
                    auto c = poly_centroid(inter);
                    fail("overlap", "regions " + std::to_string(i) + "," + std::to_string(j),
                         {c[0], c[1]});
                }
            }
        }

    if (d.valid && d.total_measure != 1)
        fail("gap", "total measure " + rat_str(d.total_measure), {});

    if (d.valid) {
        // boundary sample points: endpoints (d=1) or vertices + edge
        // midpoints (d=2), each claimed exactly once
        std::vector<ExactVec> samples;
        for (const auto& r : p.regions) {
            if (p.dim == 1) {
                samples.push_back({mod1(r.iv.lo)});
                samples.push_back({mod1(r.iv.hi)});
            } else {
                int n = static_cast<int>(r.poly.size());
                for (int i = 0; i < n; ++i) {
                    const auto& v = r.poly[i];
                    const auto& w = r.poly[(i + 1) % n];
                    samples.push_back({mod1(v[0]), mod1(v[1])});
                    samples.push_back({mod1((v[0] + w[0]) / 2), mod1((v[1] + w[1]) / 2)});
                }
            }
        }
        for (const auto& s : samples) {
            int claims = 0;
            for (const auto& r : p.regions) claims += r.contains(s) ? 1 : 0;
            if (claims != 1) {
                fail("boundary-claim",
                     "claimed " + std::to_string(claims) + " times", s);
                break;
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Boundary set, pullbacks, refinement

inline BoundarySet boundary_set(const Partition& p) {
    if (!p.explicit_mode()) throw ConfigError("boundary_set: explicit regions required");
    BoundarySet b;
    b.dim = p.dim;
    if (p.dim == 1) {
        for (const auto& r : p.regions) {
            b.points.push_back(mod1(r.iv.lo));
            b.points.push_back(mod1(r.iv.hi));
        }
        detail::sort_unique(b.points);
    } else {
        for (const auto& r : p.regions) {
            int n = static_cast<int>(r.poly.size());
            for (int i = 0; i < n; ++i)
                detail::append_wrapped_segment(b.segments, r.poly[i], r.poly[(i + 1) % n]);
        }
        detail::sort_unique(b.segments);
    }
    return b;
}

/// Image of the boundary set under g^{-1}, re-wrapped into the fundamental
/// domain (segments crossing a seam split into pieces).
inline BoundarySet pullback_boundary(const BoundarySet& gamma, const TorusIsometry& g) {
    TorusIsometry inv = inverse(g);
    BoundarySet out;
    out.dim = gamma.dim;
    if (gamma.dim == 1) {
        for (const auto& pt : gamma.points) out.points.push_back(inv(ExactVec{pt})[0]);
        detail::sort_unique(out.points);
    } else {
        for (const auto& s : gamma.segments) {
            // affine image without reduction, then wrap
            auto img = [&](const Pt2<Rat>& v) {
                ExactVec y = inv.m.apply(ExactVec{v[0], v[1]});
                return Pt2<Rat>{y[0] + inv.t[0], y[1] + inv.t[1]};
            };
            detail::append_wrapped_segment(out.segments, img(s[0]), img(s[1]));
        }
        detail::sort_unique(out.segments);
    }
    return out;
}

struct Refinement {
    BoundarySet gamma_tilde;
    std::vector<Region> regions;  // the Y_j, deterministic order
};

namespace detail {

inline Poly<Rat> poly_canonical(Poly<Rat> p) {
    auto best = std::min_element(p.begin(), p.end());
    std::rotate(p.begin(), best, p.end());
    return p;
}

/// Mod-1 pieces of g^{-1}(X_i) over all regions: a convex tiling of the
/// torus by exact polygons.
inline std::vector<Poly<Rat>> pullback_tiling(const Partition& p, const TorusIsometry& g) {
    TorusIsometry inv = inverse(g);
    std::vector<Poly<Rat>> tiles;
    for (const auto& r : p.regions) {
        Poly<Rat> img;
        for (const auto& v : r.poly) {
            ExactVec y = inv.m.apply(ExactVec{v[0], v[1]});
            img.push_back({y[0] + inv.t[0], y[1] + inv.t[1]});
        }
        ensure_ccw(img);
        for (auto& piece : wrap_mod1(img)) tiles.push_back(std::move(piece));
    }
    return tiles;
}

}  // namespace detail

/// Cuts the torus along Gamma-tilde = union of g^{-1}(Gamma) over g in G
/// (plus Gamma itself) and returns the resulting regions. Points of the same
/// region share itineraries under any PWI whose local maps lie in G.
inline Refinement refine_by_semigroup(const Partition& p, const SemigroupClosure& G) {
    if (!G.saturated)
        throw NumericalFailure("refine_by_semigroup: semigroup closure not saturated");
    if (!p.explicit_mode())
        throw ConfigError("refine_by_semigroup: explicit regions required");
    if (p.dim > 2) throw ConfigError("refine_by_semigroup: d > 2 unsupported");

    Refinement out;
    BoundarySet gamma = boundary_set(p);
    out.gamma_tilde = gamma;

    if (p.dim == 1) {
        for (const auto& g : G.elements) {
            BoundarySet pb = pullback_boundary(gamma, g);
            out.gamma_tilde.points.insert(out.gamma_tilde.points.end(), pb.points.begin(),
                                          pb.points.end());
        }
        detail::sort_unique(out.gamma_tilde.points);
        const auto& pts = out.gamma_tilde.points;
        // 0 is always a cut point: some region of a torus interval partition
        // has an endpoint there.
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Rat lo = pts[i];
            Rat hi = i + 1 < pts.size() ? pts[i + 1] : Rat(1);
            if (hi > lo) out.regions.push_back(Region::interval(lo, hi));
        }
    } else {
        std::vector<Poly<Rat>> tiles;
        for (const auto& r : p.regions) tiles.push_back(r.poly);
        for (const auto& g : G.elements) {
            BoundarySet pb = pullback_boundary(gamma, g);
            out.gamma_tilde.segments.insert(out.gamma_tilde.segments.end(),
                                            pb.segments.begin(), pb.segments.end());
            if (g.m.is_identity() && reduce_mod1(g.t) == ExactVec(2, Rat(0))) continue;
            std::vector<Poly<Rat>> next;
            auto pulled = detail::pullback_tiling(p, g);
            for (const auto& cell : tiles)
                for (const auto& q : pulled) {
                    Poly<Rat> inter = poly_intersect(cell, q);
                    if (!inter.empty() && poly_area(inter) > 0)
                        next.push_back(std::move(inter));
                }
            tiles = std::move(next);
        }
        detail::sort_unique(out.gamma_tilde.segments);
        std::sort(tiles.begin(), tiles.end(), [](const Poly<Rat>& a, const Poly<Rat>& b) {
            return detail::poly_canonical(a) < detail::poly_canonical(b);
        });
        for (auto& t : tiles) out.regions.push_back(Region::polygon(std::move(t)));
    }

    Rat total = 0;
    for (const auto& r : out.regions) {
        if (!(r.measure() > 0))
            throw NumericalFailure("refine_by_semigroup: zero-measure region");
        total += r.measure();
    }
    if (total != 1) throw NumericalFailure("refine_by_semigroup: refined measures sum to "
                                           + rat_str(total));
    return out;
}

}  // namespace pwi
