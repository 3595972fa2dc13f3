#pragma once

// Finite semigroup closure of a generator set, the computable side of weak
// periodicity: a collection of maps is weakly periodic iff the semigroup it
// generates is finite, and for exact signed-permutation isometries that is
// decidable by breadth-first closure with a size cap.

#include "pwi/isometry.hpp"

#include <deque>
#include <unordered_set>

namespace pwi {

struct SemigroupClosure {
    std::vector<TorusIsometry> elements;  // insertion order, generators first
    GeneratorSet generator_set;
    bool saturated = false;

    std::size_t size() const { return elements.size(); }

    bool contains(const TorusIsometry& g) const {
        for (const auto& e : elements)
            if (e == g) return true;
        return false;
    }
};

inline constexpr long long kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of the generators under left composition by each
/// generator. Stops saturated when no new element appears, or unsaturated
/// once the element count would exceed cap.
inline SemigroupClosure semigroup_closure(const GeneratorSet& gs,
                                          long long cap = kDefaultClosureCap) {
    SemigroupClosure out;
    out.generator_set = gs;
    std::unordered_set<TorusIsometry, IsometryHash> seen;
    std::deque<std::size_t> frontier;

    auto add = [&](const TorusIsometry& g) -> bool {
        if (seen.contains(g)) return true;
        if (static_cast<long long>(out.elements.size()) + 1 > cap) return false;
        seen.insert(g);
        out.elements.push_back(g);
        frontier.push_back(out.elements.size() - 1);
        return true;
    };

    for (const auto& g : gs.gens)
        if (!add(g)) return out;  // saturated stays false

    while (!frontier.empty()) {
        TorusIsometry e = out.elements[frontier.front()];
        frontier.pop_front();
        for (const auto& g : gs.gens)
            if (!add(compose(g, e))) return out;
    }
    out.saturated = true;
    return out;
}

struct WeakPeriodicity {
    bool certified = false;
    std::size_t size = 0;       // closure size when certified
    std::size_t explored = 0;   // elements seen before giving up otherwise
    long long cap = 0;
};

inline WeakPeriodicity is_weakly_periodic(const GeneratorSet& gs,
                                          long long cap = kDefaultClosureCap) {
    SemigroupClosure c = semigroup_closure(gs, cap);
    WeakPeriodicity w;
    w.cap = cap;
    w.certified = c.saturated;
    (w.certified ? w.size : w.explored) = c.size();
    return w;
}

}  // namespace pwi
