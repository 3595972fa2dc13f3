#pragma once

// Extendable torus isometries in canonical form.
//
// Every isometry of the torus that extends a local piece (for the rho_p
// metrics handled here) is a composition of three kinds of basic maps:
//   (i)   translation        x -> x + v   mod 1
//   (ii)  coordinate flip    x_i -> -x_i
//   (iii) coordinate exchange x_i <-> x_j
// The composition of any number of these is x -> M x + t mod 1 with M a
// signed permutation matrix, so (M, t mod 1) is a canonical form with
// decidable equality. That is what makes the semigroup closures in
// semigroup.hpp run on a plain hash set.

#include "pwi/torus.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pwi {

/// d x d signed permutation: row i has entry sign[i] in column col[i].
struct SignedPerm {
    std::vector<int> col;
    std::vector<int> sign;  // +1 / -1

    static SignedPerm identity(int d) {
        SignedPerm m;
        m.col.resize(d);
        m.sign.assign(d, 1);
        std::iota(m.col.begin(), m.col.end(), 0);
        return m;
    }

    int dim() const { return static_cast<int>(col.size()); }

    bool is_identity() const {
        for (int i = 0; i < dim(); ++i)
            if (col[i] != i || sign[i] != 1) return false;
        return true;
    }

    bool operator==(const SignedPerm& o) const { return col == o.col && sign == o.sign; }

    // (this * other) x = this (other x)
    SignedPerm times(const SignedPerm& o) const {
        SignedPerm r;
        int d = dim();
        r.col.resize(d);
        r.sign.resize(d);
        for (int i = 0; i < d; ++i) {
            r.col[i] = o.col[col[i]];
            r.sign[i] = sign[i] * o.sign[col[i]];
        }
        return r;
    }

    SignedPerm inverse() const {
        SignedPerm r;
        int d = dim();
        r.col.resize(d);
        r.sign.resize(d);
        for (int i = 0; i < d; ++i) {
            r.col[col[i]] = i;
            r.sign[col[i]] = sign[i];
        }
        return r;
    }

    template <typename Vec>
    Vec apply(const Vec& x) const {
        Vec y(x.size());
        for (int i = 0; i < dim(); ++i) {
            y[i] = x[col[i]];
            if (sign[i] < 0) y[i] = -y[i];
        }
        return y;
    }

    /// Dense matrix rows (entries -1/0/+1), used by the JSON format.
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> m(dim(), std::vector<int>(dim(), 0));
        for (int i = 0; i < dim(); ++i) m[i][col[i]] = sign[i];
        return m;
    }
};

/// Exact extendable torus isometry x -> M x + t mod 1.
struct TorusIsometry {
    SignedPerm m;
    ExactVec t;  // each coordinate in [0,1)

    static TorusIsometry identity(int d) { return {SignedPerm::identity(d), ExactVec(d, Rat(0))}; }

    int dim() const { return m.dim(); }

    bool operator==(const TorusIsometry& o) const { return m == o.m && t == o.t; }

    ExactVec operator()(const ExactVec& x) const {
        if (static_cast<int>(x.size()) != dim())
            throw std::invalid_argument("TorusIsometry: dimension mismatch");
        ExactVec y = m.apply(x);
        for (int i = 0; i < dim(); ++i) y[i] += t[i];
        return reduce_mod1(y);
    }
};

inline TorusIsometry compose(const TorusIsometry& a, const TorusIsometry& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("compose: dimension mismatch");
    TorusIsometry r;
    r.m = a.m.times(b.m);
    ExactVec t = a.m.apply(b.t);
    for (int i = 0; i < a.dim(); ++i) t[i] += a.t[i];
    r.t = reduce_mod1(t);
    return r;
}

inline TorusIsometry inverse(const TorusIsometry& g) {
    TorusIsometry r;
    r.m = g.m.inverse();
    ExactVec t = r.m.apply(g.t);
    for (auto& c : t) c = -c;
    r.t = reduce_mod1(t);
    return r;
}

/// Smallest n >= 1 with g^n = id, or nullopt when n would exceed cap.
inline std::optional<long long> order(const TorusIsometry& g, long long cap) {
    TorusIsometry e = g;
    for (long long n = 1; n <= cap; ++n) {
        if (e.m.is_identity()) {
            bool zero = true;
            for (const auto& c : e.t)
                if (c != 0) { zero = false; break; }
            if (zero) return n;
        }
        e = compose(g, e);
    }
    return std::nullopt;
}

struct IsometryHash {
    std::size_t operator()(const TorusIsometry& g) const {
        std::size_t h = 0;
        for (int i = 0; i < g.dim(); ++i) {
            boost::hash_combine(h, g.m.col[i]);
            boost::hash_combine(h, g.m.sign[i]);
            boost::hash_combine(h, rat_hash(g.t[i]));
        }
        return h;
    }
};

// ---------------------------------------------------------------------------
// Basic-isometry descriptors

struct Translate { ExactVec v; };
struct Flip { int axis; };
struct Exchange { int i, j; };
using BasicIsometry = std::variant<Translate, Flip, Exchange>;

inline TorusIsometry make_basic(const BasicIsometry& b, int dim) {
    TorusIsometry g = TorusIsometry::identity(dim);
    if (const auto* tr = std::get_if<Translate>(&b)) {
        if (static_cast<int>(tr->v.size()) != dim)
            throw std::invalid_argument("make_basic: translation dimension mismatch");
        g.t = reduce_mod1(tr->v);
    } else if (const auto* fl = std::get_if<Flip>(&b)) {
        if (fl->axis < 0 || fl->axis >= dim) throw std::out_of_range("make_basic: flip axis");
        g.m.sign[fl->axis] = -1;
    } else {
        const auto& ex = std::get<Exchange>(b);
        if (ex.i < 0 || ex.j < 0 || ex.i >= dim || ex.j >= dim || ex.i == ex.j)
            throw std::out_of_range("make_basic: exchange axes");
        std::swap(g.m.col[ex.i], g.m.col[ex.j]);
    }
    return g;
}

/// Canonical form of the superposition of basic factors applied left to
/// right: x -> f_n(...f_1(x)).
inline TorusIsometry from_basics(const std::vector<BasicIsometry>& factors, int dim) {
    TorusIsometry acc = TorusIsometry::identity(dim);
    for (const auto& f : factors) acc = compose(make_basic(f, dim), acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Generator sets and symmetrization

struct GeneratorSet {
    std::vector<TorusIsometry> gens;
    bool symmetrized = false;

    int dim() const { return gens.empty() ? 0 : gens.front().dim(); }
};

inline GeneratorSet make_generators(std::vector<TorusIsometry> gens) {
    if (gens.empty()) throw std::invalid_argument("GeneratorSet: empty");
    int d = gens.front().dim();
    for (const auto& g : gens)
        if (g.dim() != d) throw std::invalid_argument("GeneratorSet: mixed dimensions");
    return {std::move(gens), false};
}

/// Classifies g as a single basic isometry, if it is one.
inline std::optional<BasicIsometry> classify_basic(const TorusIsometry& g) {
    int d = g.dim();
    bool zero_t = true;
    for (const auto& c : g.t)
        if (c != 0) { zero_t = false; break; }
    if (g.m.is_identity()) return Translate{g.t};
    if (!zero_t) return std::nullopt;
    int flips = 0, axis = -1;
    bool perm_id = true;
    for (int i = 0; i < d; ++i) {
        if (g.m.col[i] != i) perm_id = false;
        if (g.m.sign[i] < 0) { ++flips; axis = i; }
    }
    if (perm_id && flips == 1) return Flip{axis};
    if (flips == 0) {
        std::vector<int> moved;
        for (int i = 0; i < d; ++i)
            if (g.m.col[i] != i) moved.push_back(i);
        if (moved.size() == 2 && g.m.col[moved[0]] == moved[1] && g.m.col[moved[1]] == moved[0])
            return Exchange{moved[0], moved[1]};
    }
    return std::nullopt;
}

namespace detail {

inline void push_unique(std::vector<TorusIsometry>& out, const TorusIsometry& g) {
    for (const auto& e : out)
        if (e == g) return;
    out.push_back(g);
}

}  // namespace detail

/// Closes the generator list under coordinate permutations and sign changes
/// of translation vectors (signs taken mod 1), and replaces each flip or
/// exchange by all flips, respectively all exchanges.
inline GeneratorSet symmetrize(const GeneratorSet& gs) {
    int d = gs.dim();
    std::vector<TorusIsometry> out;
    for (const auto& g : gs.gens) {
        auto basic = classify_basic(g);
        if (!basic)
            throw std::invalid_argument("symmetrize: generator is not a single basic isometry");
        if (const auto* tr = std::get_if<Translate>(&*basic)) {
            std::vector<int> perm(d);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                for (int mask = 0; mask < (1 << d); ++mask) {
                    ExactVec v(d);
                    for (int i = 0; i < d; ++i) {
                        Rat c = tr->v[perm[i]];
                        v[i] = (mask >> i) & 1 ? mod1(-c) : c;
                    }
                    TorusIsometry t = TorusIsometry::identity(d);
                    t.t = v;
                    detail::push_unique(out, t);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        } else if (std::holds_alternative<Flip>(*basic)) {
            for (int i = 0; i < d; ++i)
                detail::push_unique(out, make_basic(Flip{i}, d));
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    detail::push_unique(out, make_basic(Exchange{i, j}, d));
        }
    }
    return {std::move(out), true};
}

inline bool commute(const TorusIsometry& a, const TorusIsometry& b) {
    return compose(a, b) == compose(b, a);
}

}  // namespace pwi
