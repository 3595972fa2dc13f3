#pragma once

// Floating-point orbit machinery: itineraries, eventual-periodicity
// detection with an itinerary-confirmation window, exact orbits for exact
// systems, and the isolation probe around a reference trajectory.

#include "pwi/system.hpp"

#include <cmath>
#include <unordered_map>

namespace pwi {

enum class OrbitStatus { Open, EventuallyPeriodic, EscapedToFixedRegion };

struct OrbitRecord {
    std::vector<NumVec> points;    // points[0] = x0 reduced
    std::vector<int> itinerary;    // itinerary[k] = region index of points[k]
    OrbitStatus status = OrbitStatus::Open;
    int preperiod = -1;
    int period = -1;
};

/// Iterates locate-then-apply up to n steps. A later point closing within
/// period_tol of an earlier one only counts as periodic after one more full
/// window of matching itineraries and distances.
inline OrbitRecord orbit(const NumericPwi& sys, const NumVec& x0, int n,
                         double period_tol = 1e-9) {
    OrbitRecord rec;
    rec.points.push_back(reduce_mod1(x0));
    for (int k = 0; k < n; ++k) {
        auto [idx, next] = sys.step(rec.points.back());
        rec.itinerary.push_back(idx);
        rec.points.push_back(next);

        for (int j = static_cast<int>(rec.points.size()) - 2; j >= 0; --j) {
            if (torus_distance(next, rec.points[j], sys.metric) >= period_tol) continue;
            int period = static_cast<int>(rec.points.size()) - 1 - j;
            // confirmation window: one more period of agreeing itineraries
            NumVec y = next;
            bool ok = true;
            for (int m = 0; m < period && ok; ++m) {
                auto [iy, ny] = sys.step(y);
                ok = j + m < static_cast<int>(rec.itinerary.size()) &&
                     iy == rec.itinerary[j + m] &&
                     torus_distance(ny, rec.points[j + m + 1], sys.metric) < 10 * period_tol;
                y = ny;
            }
            if (!ok) continue;
            rec.preperiod = j;
            rec.period = period;
            rec.status = period == 1 && sys.map_for(rec.itinerary.back()).is_identity(1e-14)
                             ? OrbitStatus::EscapedToFixedRegion
                             : OrbitStatus::EventuallyPeriodic;
            return rec;
        }
    }
    return rec;
}

struct ExactOrbit {
    std::vector<ExactVec> points;
    std::vector<int> itinerary;
    int preperiod = -1;
    int period = -1;  // -1 when no repeat within the step budget
};

inline ExactOrbit exact_orbit(const ExactPwi& sys, const ExactVec& x0, int max_steps) {
    ExactOrbit rec;
    rec.points.push_back(reduce_mod1(x0));
    auto vec_hash = [](const ExactVec& v) {
        std::size_t h = 0;
        for (const auto& c : v) boost::hash_combine(h, rat_hash(c));
        return h;
    };
    std::unordered_map<ExactVec, int, decltype(vec_hash)> seen(16, vec_hash);
    seen[rec.points[0]] = 0;
    for (int k = 0; k < max_steps; ++k) {
        auto [idx, next] = sys.step(rec.points.back());
        rec.itinerary.push_back(idx);
        if (auto it = seen.find(next); it != seen.end()) {
            rec.preperiod = it->second;
            rec.period = k + 1 - it->second;
            rec.points.push_back(next);
            return rec;
        }
        seen[next] = k + 1;
        rec.points.push_back(next);
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Isolation probe

struct RadiusReport {
    double radius = 0;
    bool itineraries_agree = true;  // all sphere samples, all depths
    double min_dist = 0;            // min/max over samples and steps of
    double max_dist = 0;            // rho(T^k x, T^k z), k = 0..n
};

/// Samples points on the sphere of each radius around z and tracks how their
/// trajectories separate from the trajectory of z. With positive boundary
/// clearance R and r < R the distances stay constantly r.
inline std::vector<RadiusReport> isolation_probe(const NumericPwi& sys, const NumVec& z,
                                                 const std::vector<double>& radii, int n,
                                                 int directions = 64) {
    std::vector<NumVec> zorb{reduce_mod1(z)};
    for (int k = 0; k < n; ++k) zorb.push_back(sys.apply(zorb.back()));

    std::vector<RadiusReport> out;
    for (double r : radii) {
        RadiusReport rep;
        rep.radius = r;
        rep.min_dist = std::numeric_limits<double>::infinity();
        rep.max_dist = 0;
        std::vector<NumVec> samples;
        if (sys.dim == 1) {
            samples.push_back(reduce_mod1(NumVec{z[0] + r}));
            samples.push_back(reduce_mod1(NumVec{z[0] - r}));
        } else {
            for (int i = 0; i < directions; ++i) {
                double a = 2 * M_PI * i / directions;
                samples.push_back(
                    reduce_mod1(NumVec{z[0] + r * std::cos(a), z[1] + r * std::sin(a)}));
            }
        }
        for (NumVec x : samples) {
            for (int k = 0; k <= n; ++k) {
                double d = torus_distance(x, zorb[k], sys.metric);
                rep.min_dist = std::min(rep.min_dist, d);
                rep.max_dist = std::max(rep.max_dist, d);
                if (k < n) {
                    if (sys.locate(x) != sys.locate(zorb[k])) rep.itineraries_agree = false;
                    x = sys.apply(x);
                }
            }
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace pwi
