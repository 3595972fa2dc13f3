#pragma once

// Mass vectors over a uniform torus grid: push-forward of measures under a
// system (center-point transport, mass moved never scaled) and the focusing
// estimator, which tracks the cells hit at every step of a stabilization
// window.

#include "pwi/system.hpp"

#include <cstdint>
#include <numeric>

namespace pwi {

struct GridMeasure {
    std::vector<int> res;      // cells per axis
    std::vector<double> mass;  // x-major order

    static GridMeasure uniform(std::vector<int> res) {
        GridMeasure g;
        g.res = std::move(res);
        g.mass.assign(g.cells(), 1.0 / g.cells());
        return g;
    }

    int cells() const {
        int c = 1;
        for (int r : res) c *= r;
        return c;
    }

    int dim() const { return static_cast<int>(res.size()); }

    NumVec center(int idx) const {
        NumVec x(dim());
        for (int a = 0; a < dim(); ++a) {
            x[a] = (idx % res[a] + 0.5) / res[a];
            idx /= res[a];
        }
        return x;
    }

    int cell_of(const NumVec& x) const {
        int idx = 0, stride = 1;
        for (int a = 0; a < dim(); ++a) {
            int c = static_cast<int>(std::floor(x[a] * res[a]));
            c = std::clamp(c, 0, res[a] - 1);
            idx += stride * c;
            stride *= res[a];
        }
        return idx;
    }

    double total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }
};

/// Moves each cell's mass to the cell containing the image of its center.
inline GridMeasure push_forward(const NumericPwi& sys, const GridMeasure& gm) {
    if (gm.dim() != sys.dim)
        throw ConfigError("push_forward: grid dimension does not match the system");
    GridMeasure out;
    out.res = gm.res;
    out.mass.assign(gm.mass.size(), 0.0);
    for (int i = 0; i < gm.cells(); ++i) {
        if (gm.mass[i] == 0.0) continue;
        out.mass[gm.cell_of(sys.apply(gm.center(i)))] += gm.mass[i];
    }
    return out;
}

struct FocusingEstimate {
    std::vector<int> res;
    std::vector<std::uint8_t> persistent;  // 1 = hit at every window step
    int burn_in = 0, horizon = 0;
    double estimated_measure = 0;
};

/// Seeds one sample per cell and intersects the occupied-cell sets over all
/// steps in [burn_in, horizon].
inline FocusingEstimate focusing_estimate(const NumericPwi& sys, std::vector<int> res,
                                          int burn_in, int horizon) {
    if (horizon <= burn_in || burn_in < 0)
        throw std::domain_error("focusing_estimate: need horizon > burn_in >= 0");
    GridMeasure grid;
    grid.res = std::move(res);
    int n = grid.cells();

    std::vector<NumVec> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = grid.center(i);

    FocusingEstimate est;
    est.res = grid.res;
    est.burn_in = burn_in;
    est.horizon = horizon;
    est.persistent.assign(n, 1);
    std::vector<std::uint8_t> occupied(n);

    for (int step = 0; step <= horizon; ++step) {
        if (step > 0)
            for (auto& x : pts) x = sys.apply(x);
        if (step < burn_in) continue;
        std::fill(occupied.begin(), occupied.end(), 0);
        for (const auto& x : pts) occupied[grid.cell_of(x)] = 1;
        for (int i = 0; i < n; ++i) est.persistent[i] &= occupied[i];
    }
    long long cnt = std::count(est.persistent.begin(), est.persistent.end(), 1);
    est.estimated_measure = static_cast<double>(cnt) / n;
    return est;
}

}  // namespace pwi
