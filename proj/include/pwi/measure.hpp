#pragma once

// Exact absolutely continuous invariant measures of weakly periodic systems.
//
// Once the torus is cut into the refined regions Y_j, every cycle of the
// region graph exchanges regions of equal Lebesgue measure; normalizing the
// Lebesgue measure on the union of one cycle gives an invariant measure with
// piecewise constant density. The checks here are all zero-tolerance: image
// regions are compared as exact polytopes.

#include "pwi/region_graph.hpp"

#include <string>
#include <vector>

namespace pwi {

struct PwMeasure {
    // (region, constant density on it); total mass is exactly 1
    std::vector<std::pair<Region, Rat>> support;

    Rat mass() const {
        Rat m = 0;
        for (const auto& [r, d] : support) m += d * r.measure();
        return m;
    }

    Rat support_measure() const {
        Rat m = 0;
        for (const auto& [r, d] : support) m += r.measure();
        return m;
    }
};

struct MeasureAnalysis {
    WeakPeriodicity certificate;
    SemigroupClosure closure;
    Refinement refinement;
    RegionGraph graph;
    std::vector<PwMeasure> measures;  // one per cycle, cycle order
};

namespace detail {

inline Rat piece_measure(const Interval<Rat>& p) { return p.length(); }
inline Rat piece_measure(const Poly<Rat>& p) { return poly_area(p); }

/// Exact measure of image(Y_j) inside the closed target region.
inline Rat image_overlap(const Region& from, const TorusIsometry& g, const Region& target) {
    RegionImage im = region_image(from, g);
    Rat acc = 0;
    if (from.dim == 1) {
        for (const auto& p : im.pieces1)
            for (int z = -1; z <= 1; ++z)
                acc += overlap_length(Rat(p.lo + z), Rat(p.hi + z), target.iv.lo, target.iv.hi);
    } else {
        for (const auto& p : im.pieces2)
            for (int zx = -1; zx <= 1; ++zx)
                for (int zy = -1; zy <= 1; ++zy) {
                    Poly<Rat> shifted = p;
                    for (auto& v : shifted) { v[0] += zx; v[1] += zy; }
                    Poly<Rat> inter = poly_intersect(shifted, target.poly);
                    if (!inter.empty()) acc += poly_area(inter);
                }
    }
    return acc;
}

}  // namespace detail

/// Zero-tolerance check that T maps each cycle region onto the next one as
/// an exact set (up to the measure-zero cut set).
inline bool exact_cycle_image_equality(const ExactPwi& sys, const RegionGraph& graph) {
    for (const auto& cyc : graph.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Region& from = graph.regions[cyc[i]];
            const Region& to = graph.regions[graph.successor[cyc[i]]];
            if (from.measure() != to.measure()) return false;
            TorusIsometry g = sys.map_for(sys.partition.locate(from.sample()));
            if (detail::image_overlap(from, g, to) != to.measure()) return false;
        }
    }
    return true;
}

/// One invariant measure per cycle: density 1/(k m(Y)) on the k equal-measure
/// regions of the cycle. Refuses when weak periodicity cannot be certified
/// under the cap.
inline MeasureAnalysis analyze_invariant_measures(const ExactPwi& sys,
                                                  long long cap = kDefaultClosureCap) {
    if (!sys.explicit_mode())
        throw ConfigError("invariant_measures: explicit partition required");
    MeasureAnalysis a;
    GeneratorSet gens = sys.generators();
    a.certificate = is_weakly_periodic(gens, cap);
    if (!a.certificate.certified)
        throw NumericalFailure("invariant_measures: closure exceeded cap " +
                               std::to_string(cap) + " after " +
                               std::to_string(a.certificate.explored) + " elements");
    a.closure = semigroup_closure(gens, cap);
    a.refinement = refine_by_semigroup(sys.partition, a.closure);
    a.graph = transition_graph(sys, a.refinement, a.closure);

    for (const auto& cyc : a.graph.cycles) {
        Rat m = a.graph.regions[cyc.front()].measure();
        for (int j : cyc)
            if (a.graph.regions[j].measure() != m)
                throw NumericalFailure("invariant_measures: unequal measures on a cycle");
        PwMeasure mu;
        Rat density = Rat(1) / (Rat(static_cast<int>(cyc.size())) * m);
        for (int j : cyc) mu.support.push_back({a.graph.regions[j], density});
        if (mu.mass() != 1)
            throw NumericalFailure("invariant_measures: mass normalization failed");
        a.measures.push_back(std::move(mu));
    }
    if (a.measures.empty())
        throw NumericalFailure("invariant_measures: no cycle found");  // cannot happen
    return a;
}

inline std::vector<PwMeasure> invariant_measures(const ExactPwi& sys,
                                                 long long cap = kDefaultClosureCap) {
    return analyze_invariant_measures(sys, cap).measures;
}

// ---------------------------------------------------------------------------
// Boundary-neighborhood mass (d = 1, exact)

/// mu-mass of the delta-neighborhood of Gamma on the circle, computed with
/// exact interval arithmetic.
inline Rat boundary_mass(const PwMeasure& mu, const BoundarySet& gamma, const Rat& delta) {
    if (delta <= 0) throw std::domain_error("boundary_mass: delta must be positive");
    if (gamma.dim != 1) throw ConfigError("boundary_mass: exact path is d = 1 only");
    if (delta >= Rat(1, 2)) return mu.mass();  // neighborhood covers the circle

    // collect (gamma-delta, gamma+delta) clipped into [0,1), then merge
    std::vector<std::pair<Rat, Rat>> pieces;
    for (const auto& g : gamma.points) {
        Rat lo = g - delta, hi = g + delta;
        for (int z = -1; z <= 1; ++z) {
            Rat a = std::max(Rat(lo + z), Rat(0)), b = std::min(Rat(hi + z), Rat(1));
            if (b > a) pieces.push_back({a, b});
        }
    }
    std::sort(pieces.begin(), pieces.end());
    std::vector<std::pair<Rat, Rat>> merged;
    for (const auto& p : pieces) {
        if (!merged.empty() && p.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, p.second);
        else
            merged.push_back(p);
    }

    Rat acc = 0;
    for (const auto& [r, d] : mu.support)
        for (const auto& [a, b] : merged) acc += d * overlap_length(a, b, r.iv.lo, r.iv.hi);
    return acc;
}

}  // namespace pwi
