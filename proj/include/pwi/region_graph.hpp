#pragma once

// Induced dynamics on the refined regions Y_j: every Y_j maps entirely into
// one Y_{sigma(j)}, so the dynamics on regions is a functional graph. Its
// cycles carry the absolutely continuous invariant measures; everything else
// wanders into the cycles.

#include "pwi/system.hpp"

#include <vector>

namespace pwi {

struct RegionGraph {
    std::vector<Region> regions;           // the Y_j
    std::vector<int> successor;            // sigma
    std::vector<std::vector<int>> cycles;  // disjoint index cycles
    std::vector<int> wandering;            // indices on no cycle
    std::vector<int> cycle_of;             // cycle id or -1
};

namespace detail {

/// Exact image of a region under a signed-permutation isometry, wrapped into
/// the fundamental domain: one or two intervals (d=1), convex pieces (d=2).
struct RegionImage {
    std::vector<Interval<Rat>> pieces1;
    std::vector<Poly<Rat>> pieces2;
};

inline RegionImage region_image(const Region& r, const TorusIsometry& g) {
    RegionImage out;
    if (r.dim == 1) {
        Rat a = g.m.sign[0] > 0 ? r.iv.lo : -r.iv.hi;
        a += g.t[0];
        Rat len = r.iv.length();
        Rat lo = mod1(a);
        Rat hi = lo + len;
        if (hi <= 1) {
            out.pieces1.push_back({lo, hi});
        } else {
            out.pieces1.push_back({lo, Rat(1)});
            out.pieces1.push_back({Rat(0), hi - 1});
        }
    } else {
        Poly<Rat> img;
        for (const auto& v : r.poly) {
            ExactVec y = g.m.apply(ExactVec{v[0], v[1]});
            img.push_back({y[0] + g.t[0], y[1] + g.t[1]});
        }
        ensure_ccw(img);
        out.pieces2 = wrap_mod1(img);
    }
    return out;
}

/// Closed containment of an image piece in a region.
inline bool piece_in_closed(const Interval<Rat>& piece, const Region& y) {
    for (int z = -1; z <= 1; ++z)
        if (piece.lo + z >= y.iv.lo && piece.hi + z <= y.iv.hi) return true;
    return false;
}

inline bool piece_in_closed(const Poly<Rat>& piece, const Region& y) {
    for (int zx = -1; zx <= 1; ++zx)
        for (int zy = -1; zy <= 1; ++zy) {
            bool all = true;
            for (const auto& v : piece)
                if (poly_side(y.poly, Pt2<Rat>{v[0] + zx, v[1] + zy}) == Side::Outside) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    return false;
}

}  // namespace detail

/// Builds sigma by mapping an interior sample of each Y_j and verifying
/// exactly that the whole image region lands in the closed successor region
/// (boundary contact is allowed: the cuts of Gamma-tilde have measure zero).
inline RegionGraph transition_graph(const ExactPwi& sys, const Refinement& ref,
                                    const SemigroupClosure& G) {
    if (!G.saturated)
        throw NumericalFailure("transition_graph: weak periodicity not certified");
    RegionGraph out;
    out.regions = ref.regions;
    int n = static_cast<int>(ref.regions.size());
    out.successor.assign(n, -1);

    for (int j = 0; j < n; ++j) {
        ExactVec s = ref.regions[j].sample();
        int loc = sys.partition.locate(s);
        TorusIsometry g = sys.map_for(loc);
        ExactVec img = g(s);
        for (int k = 0; k < n; ++k)
            if (ref.regions[k].contains_interior(img)) { out.successor[j] = k; break; }
        if (out.successor[j] < 0)
            throw NumericalFailure("transition_graph: image sample on the cut set");

        detail::RegionImage im = detail::region_image(ref.regions[j], g);
        const Region& target = ref.regions[out.successor[j]];
        bool ok = true;
        for (const auto& p : im.pieces1) ok = ok && detail::piece_in_closed(p, target);
        for (const auto& p : im.pieces2) ok = ok && detail::piece_in_closed(p, target);
        if (!ok)
            throw NumericalFailure("transition_graph: image of region " + std::to_string(j) +
                                   " not contained in its successor");
    }

    // cycle extraction in the functional graph
    out.cycle_of.assign(n, -1);
    std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<int> path;
        int v = start;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = out.successor[v];
        }
        if (state[v] == 1) {  // closed a new cycle at v
            std::vector<int> cyc;
            while (true) {
                int u = path.back();
                path.pop_back();
                cyc.push_back(u);
                if (u == v) break;
            }
            std::reverse(cyc.begin(), cyc.end());
            for (int u : cyc) {
                out.cycle_of[u] = static_cast<int>(out.cycles.size());
                state[u] = 2;
            }
            out.cycles.push_back(std::move(cyc));
        }
        for (int u : path) state[u] = 2;
    }
    for (int j = 0; j < n; ++j)
        if (out.cycle_of[j] < 0) out.wandering.push_back(j);
    return out;
}

}  // namespace pwi
