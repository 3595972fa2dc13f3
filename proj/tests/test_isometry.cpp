#include "pwi/isometry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pwi;

namespace {

TorusIsometry translate1(const Rat& v) { return make_basic(Translate{{v}}, 1); }

TorusIsometry random_isometry(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> num(0, 11), coin(0, 1), axis(0, d - 1);
    std::vector<BasicIsometry> factors;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
        switch (rng() % 3) {
            case 0: {
                ExactVec v(d);
                for (auto& c : v) c = Rat(num(rng), 12);
                factors.push_back(Translate{v});
                break;
            }
            case 1:
                factors.push_back(Flip{axis(rng)});
                break;
            default: {
                if (d == 1) { factors.push_back(Flip{0}); break; }
                int i = axis(rng), j = axis(rng);
                if (i == j) j = (j + 1) % d;
                factors.push_back(Exchange{i, j});
            }
        }
    }
    return from_basics(factors, d);
}

ExactVec random_point(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> num(0, 23);
    ExactVec v(d);
    for (auto& c : v) c = Rat(num(rng), 24);
    return v;
}

}  // namespace

TEST_CASE("from_basics canonical forms") {
    TorusIsometry t = make_basic(Translate{{Rat(1, 3), Rat(0)}}, 2);
    CHECK(t.m.is_identity());
    CHECK(t.t == ExactVec{Rat(1, 3), Rat(0)});

    TorusIsometry f = make_basic(Flip{0}, 2);
    CHECK(f.m.rows() == std::vector<std::vector<int>>{{-1, 0}, {0, 1}});
    CHECK(f.t == ExactVec{Rat(0), Rat(0)});

    // flip then translate in d=1: x -> -x + a mod 1
    Rat a(2, 5);
    TorusIsometry g = from_basics({Flip{0}, Translate{{a}}}, 1);
    ExactVec x{Rat(1, 10)};
    CHECK(g(x)[0] == mod1(a - x[0]));

    CHECK_THROWS_AS(make_basic(Flip{3}, 2), std::out_of_range);
}

TEST_CASE("apply") {
    CHECK(translate1(Rat(1, 3))(ExactVec{Rat(5, 6)})[0] == Rat(1, 6));
    CHECK(make_basic(Flip{0}, 1)(ExactVec{Rat(1, 4)})[0] == Rat(3, 4));
    TorusIsometry ex = make_basic(Exchange{0, 1}, 2);
    CHECK(ex(ExactVec{Rat(1, 5), Rat(2, 5)}) == ExactVec{Rat(2, 5), Rat(1, 5)});
}

TEST_CASE("compose") {
    CHECK(compose(translate1(Rat(1, 3)), translate1(Rat(1, 3))).t[0] == Rat(2, 3));

    TorusIsometry flip = make_basic(Flip{0}, 1);
    TorusIsometry ff = compose(flip, flip);
    CHECK(ff == TorusIsometry::identity(1));

    // g1 = -x, g2 = -x + a  =>  g1 o g2 = x - a
    Rat a(3, 7);
    TorusIsometry g1 = flip;
    TorusIsometry g2 = from_basics({Flip{0}, Translate{{a}}}, 1);
    TorusIsometry c = compose(g1, g2);
    CHECK(c.m.is_identity());
    CHECK(c.t[0] == mod1(-a));
}

TEST_CASE("compose is a homomorphism and associative") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        int d = 1 + static_cast<int>(rng() % 3);
        TorusIsometry a = random_isometry(rng, d), b = random_isometry(rng, d),
                      c = random_isometry(rng, d);
        ExactVec x = random_point(rng, d);
        CHECK(compose(a, b)(x) == a(b(x)));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(translate1(Rat(1, 3))).t[0] == Rat(2, 3));
    TorusIsometry flip = make_basic(Flip{0}, 1);
    CHECK(inverse(flip) == flip);

    TorusIsometry g = from_basics({Exchange{0, 1}, Translate{{Rat(1, 3), Rat(1, 4)}}}, 2);
    TorusIsometry gi = inverse(g);
    CHECK(compose(g, gi) == TorusIsometry::identity(2));
    CHECK(compose(gi, g) == TorusIsometry::identity(2));
    CHECK(gi.t == ExactVec{Rat(3, 4), Rat(2, 3)});

    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        int d = 1 + static_cast<int>(rng() % 3);
        TorusIsometry a = random_isometry(rng, d);
        CHECK(compose(a, inverse(a)) == TorusIsometry::identity(d));
    }
}

TEST_CASE("order") {
    CHECK(order(translate1(Rat(1, 3)), 100) == 3);
    CHECK(order(make_basic(Flip{0}, 1), 100) == 2);
    CHECK_FALSE(order(translate1(Rat(6180339887LL, 10000000000LL)), 100).has_value());
}

TEST_CASE("order exists below 2 d! lcm of denominators") {
    std::mt19937_64 rng(13);
    long long fact[4] = {1, 1, 2, 6};
    for (int it = 0; it < 40; ++it) {
        int d = 1 + static_cast<int>(rng() % 3);
        TorusIsometry g = random_isometry(rng, d);
        long long l = 1;
        for (const auto& c : g.t)
            l = std::lcm(l, rat_den(c).convert_to<long long>());
        CHECK(order(g, 2 * fact[d] * l).has_value());
    }
}

TEST_CASE("symmetrize") {
    // d=2 translation: all permutations and sign changes, 8 variants
    GeneratorSet gs = make_generators({make_basic(Translate{{Rat(1, 3), Rat(1, 4)}}, 2)});
    GeneratorSet sym = symmetrize(gs);
    CHECK(sym.symmetrized);
    CHECK(sym.gens.size() == 8);
    for (const auto& g : sym.gens) CHECK(g.m.is_identity());
    CHECK(std::count_if(sym.gens.begin(), sym.gens.end(), [](const TorusIsometry& g) {
              return g.t == ExactVec{Rat(3, 4), Rat(2, 3)};
          }) == 1);

    // a flip symmetrizes to all flips
    GeneratorSet fs = symmetrize(make_generators({make_basic(Flip{0}, 2)}));
    CHECK(fs.gens.size() == 2);

    // symmetric value: sign change of 1/2 is itself
    GeneratorSet hs = symmetrize(make_generators({translate1(Rat(1, 2))}));
    CHECK(hs.gens.size() == 1);

    // non-basic generators are rejected
    TorusIsometry mixed = from_basics({Flip{0}, Translate{{Rat(1, 3)}}}, 1);
    CHECK_THROWS_AS(symmetrize(make_generators({mixed})), std::invalid_argument);
}

TEST_CASE("symmetrization growth factor is d-bounded") {
    std::mt19937_64 rng(17);
    long long fact[4] = {1, 1, 2, 6};
    std::uniform_int_distribution<int> num(0, 11);
    for (int it = 0; it < 30; ++it) {
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<TorusIsometry> gens;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < n; ++k) {
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0 || d == 1) {
                ExactVec v(d);
                for (auto& c : v) c = Rat(num(rng), 12);
                gens.push_back(make_basic(Translate{v}, d));
            } else if (kind == 1) {
                gens.push_back(make_basic(Flip{static_cast<int>(rng() % d)}, d));
            } else {
                int i = static_cast<int>(rng() % d), j = (i + 1) % d;
                gens.push_back(make_basic(Exchange{std::min(i, j), std::max(i, j)}, d));
            }
        }
        GeneratorSet gs = make_generators(gens);
        GeneratorSet sym = symmetrize(gs);
        // each generator contributes at most d! 2^d variants (for d >= 2
        // that is within the cruder (d!)^3 factor)
        long long f = fact[d] * (1LL << d);
        CHECK(sym.gens.size() <= gs.gens.size() * f);
        if (d >= 2) CHECK(sym.gens.size() <= gs.gens.size() * fact[d] * fact[d] * fact[d]);
    }
}
