#include "rootsys/root_system.hpp"

#include "support/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace rootsys;
using support::validation_error;

namespace {

std::size_t classical_count(char series, int l) {
    switch (series) {
        case 'A': return static_cast<std::size_t>(l) * (l + 1);
        case 'B':
        case 'C': return 2 * static_cast<std::size_t>(l) * l;
        case 'D': return 2 * static_cast<std::size_t>(l) * (l - 1);
        case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
        case 'F': return 48;
        default: return 12;  // G2
    }
}

}  // namespace

TEST_CASE("root counts match the classical values up to rank 8") {
    for (char s : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int l = 1; l <= 8; ++l) {
            if (!RootSystem::valid_type(s, l)) continue;
            RootSystem r = RootSystem::build(s, l);
            CHECK(r.roots().size() == classical_count(s, l));
            CHECK(r.positive_count() * 2 == r.roots().size());
        }
}

TEST_CASE("invalid types are rejected with an explanation") {
    CHECK_THROWS_AS(RootSystem::build('A', 0), validation_error);
    CHECK_THROWS_AS(RootSystem::build('D', 3), validation_error);
    CHECK_THROWS_AS(RootSystem::build('E', 9), validation_error);
    CHECK_THROWS_AS(RootSystem::build('H', 2), validation_error);
    CHECK_NOTHROW(RootSystem::build('C', 2));
}

TEST_CASE("rank one system is a root pair") {
    RootSystem r = RootSystem::build('A', 1);
    REQUIRE(r.roots().size() == 2);
    CHECK(r.root(0).simple == CoordVec{1});
    CHECK(r.root(1).simple == CoordVec{-1});
}

TEST_CASE("B2 reproduces the Euclidean model") {
    RootSystem r = RootSystem::build('B', 2);
    // alpha_1 = e1 - e2, alpha_2 = e2
    std::set<std::pair<Coord, Coord>> got;
    for (const Root& root : r.roots())
        got.insert({root.simple[0], root.simple[1] - root.simple[0]});
    std::set<std::pair<Coord, Coord>> want{{1, -1}, {-1, 1}, {1, 1},  {-1, -1},
                                           {1, 0},  {-1, 0}, {0, 1}, {0, -1}};
    CHECK(got == want);
}

TEST_CASE("G2 closure agrees with brute-force norm enumeration") {
    RootSystem r = RootSystem::build('G', 2);
    // Gram matrix of the simple roots in symmetrizer units
    const long long g[2][2] = {{2, -3}, {-3, 6}};
    std::set<CoordVec> oracle;
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            long long norm = a * a * g[0][0] + 2 * a * b * g[0][1] + b * b * g[1][1];
            if (norm == 2 || norm == 6) oracle.insert(CoordVec{a, b});
        }
    std::set<CoordVec> got;
    std::size_t longs = 0;
    for (const Root& root : r.roots()) {
        got.insert(root.simple);
        if (root.norm_d == 3) ++longs;
    }
    CHECK(got == oracle);
    CHECK(r.roots().size() == 12);
    CHECK(longs == 6);
}

TEST_CASE("pairing against coroots") {
    for (auto [s, l] : {std::pair<char, int>{'A', 3}, {'B', 2}, {'F', 4}, {'G', 2}}) {
        RootSystem r = RootSystem::build(s, l);
        for (int i = 0; i < l; ++i) {
            CoordVec omega(l, 0);
            omega[i] = 1;
            for (int j = 0; j < l; ++j)
                CHECK(r.pairing(omega, r.simple_root(j)) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("B2 short-against-long pairing matches the Euclidean model") {
    RootSystem r = RootSystem::build('B', 2);
    // beta = e2 (short), tau = e1 - e2 (long): 2(e2|e1-e2)/|e1-e2|^2 = -1
    CoordVec beta_weight = r.root(r.simple_root(1)).weight;
    CHECK(r.pairing(beta_weight, r.simple_root(0)) == -1);
}

TEST_CASE("pairing is integral on the weight lattice") {
    for (auto [s, l] : {std::pair<char, int>{'B', 3}, {'G', 2}, {'D', 4}}) {
        RootSystem r = RootSystem::build(s, l);
        std::mt19937_64 rng(5);
        for (int n = 0; n < 20; ++n) {
            CoordVec lambda(l);
            for (int i = 0; i < l; ++i) lambda[i] = static_cast<Coord>(rng() % 11) - 5;
            for (std::size_t idx = 0; idx < r.roots().size(); ++idx)
                CHECK_NOTHROW(r.pairing(lambda, static_cast<int>(idx)));
        }
    }
}

TEST_CASE("simple reflections") {
    RootSystem r = RootSystem::build('B', 2);
    const auto& c = r.cartan();
    for (int i = 0; i < 2; ++i) {
        CoordVec omega(2, 0);
        omega[i] = 1;
        CoordVec reflected = r.reflect_weight(omega, i);
        for (int k = 0; k < 2; ++k) CHECK(reflected[k] == omega[k] - c[k][i]);
        int other = 1 - i;
        CoordVec fixed(2, 0);
        fixed[other] = 1;
        CHECK(r.reflect_weight(fixed, i) == fixed);
        CoordVec alpha = r.root(r.simple_root(i)).weight;
        CoordVec neg = r.reflect_weight(alpha, i);
        for (int k = 0; k < 2; ++k) CHECK(neg[k] == -alpha[k]);
        // involutive
        CHECK(r.reflect_weight(reflected, i) == omega);
    }
}

TEST_CASE("closure soundness: reflections never leave the root set") {
    for (auto [s, l] : {std::pair<char, int>{'A', 4}, {'C', 3}, {'G', 2}}) {
        RootSystem r = RootSystem::build(s, l);
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx)
            for (int i = 0; i < l; ++i) CHECK(r.reflect_root(static_cast<int>(idx), i) >= 0);
    }
}

TEST_CASE("make_dominant") {
    SUBCASE("dominant input returns an empty word") {
        RootSystem r = RootSystem::build('A', 3);
        RatVec v{Rat(1), Rat(0), Rat(2)};
        auto res = r.make_dominant(v);
        CHECK(res.word.empty());
        CHECK(res.vec == v);
    }
    SUBCASE("the antidominant vector needs one reflection per positive root") {
        for (auto [s, l] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'D', 4}, {'G', 2}}) {
            RootSystem r = RootSystem::build(s, l);
            RatVec v(l, Rat(-1));
            auto res = r.make_dominant(v);
            CHECK(res.word.size() == r.positive_count());
            CHECK(std::all_of(res.vec.begin(), res.vec.end(),
                              [](const Rat& x) { return x == 1; }));
        }
    }
    SUBCASE("A2 sample agrees with full orbit enumeration") {
        RootSystem r = RootSystem::build('A', 2);
        RatVec v{Rat(-1), Rat(2)};
        auto res = r.make_dominant(v);
        // full Weyl orbit by closure
        std::set<std::vector<Rat>> orbit{v};
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = orbit;
            for (const auto& x : snapshot)
                for (int i = 0; i < 2; ++i)
                    if (orbit.insert(r.reflect_weight(x, i)).second) grew = true;
        }
        CHECK(orbit.size() == 6);
        CHECK(orbit.count(res.vec) == 1);
        for (const auto& x : orbit) {
            bool dom = std::all_of(x.begin(), x.end(), [](const Rat& t) { return t >= 0; });
            if (dom) CHECK(x == res.vec);
        }
    }
    SUBCASE("idempotence") {
        std::mt19937_64 rng(17);
        RootSystem r = RootSystem::build('C', 3);
        for (int n = 0; n < 25; ++n) {
            RatVec v(3);
            for (int i = 0; i < 3; ++i)
                v[i] = Rat(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 3);
            auto res = r.make_dominant(v);
            CHECK(r.make_dominant(res.vec).word.empty());
            CHECK(r.apply_word(res.word, v) == res.vec);
        }
    }
}

TEST_CASE("indecomposable basis") {
    RootSystem b2 = RootSystem::build('B', 2);
    CHECK(indecomposable_basis(b2, {}).empty());

    std::vector<int> positives;
    for (std::size_t i = 0; i < b2.roots().size(); ++i)
        if (b2.root(static_cast<int>(i)).positive) positives.push_back(static_cast<int>(i));
    std::vector<int> basis = indecomposable_basis(b2, positives);
    CHECK(basis == std::vector<int>{b2.simple_root(0), b2.simple_root(1)});

    CHECK(indecomposable_basis(b2, {b2.simple_root(0)}) ==
          std::vector<int>{b2.simple_root(0)});

    SUBCASE("rejects sets meeting their negation") {
        CHECK_THROWS_AS(indecomposable_basis(b2, {0, b2.negate(0)}), validation_error);
    }
    SUBCASE("rejects sets that are not closed") {
        RootSystem a2 = RootSystem::build('A', 2);
        // {alpha1, alpha2} without alpha1+alpha2
        CHECK_THROWS_AS(indecomposable_basis(a2, {a2.simple_root(0), a2.simple_root(1)}),
                        validation_error);
    }
}

TEST_CASE("extend_to_simple_system") {
    RootSystem b2 = RootSystem::build('B', 2);
    SUBCASE("long-root subsystem extends to the base chamber") {
        // functional dual to the short node's weight kills exactly {±tau}
        RatVec a{Rat(0), Rat(1)}, b{Rat(1), Rat(1)};
        Chamber c = extend_to_simple_system(b2, {b2.simple_root(0)}, a, b);
        CHECK(c.word.empty());
        CHECK(c.simple_roots[0] == CoordVec{1, 0});
        CHECK(c.simple_roots[1] == CoordVec{0, 1});
        CHECK(is_simple_system(b2, c.simple_roots));
    }
    SUBCASE("empty subsystem with a regular functional gives its own chamber") {
        RatVec a{Rat(-1), Rat(-1)}, b{Rat(1), Rat(2)};
        Chamber c = extend_to_simple_system(b2, {}, a, b);
        CHECK_FALSE(c.word.empty());
        CHECK(is_simple_system(b2, c.simple_roots));
        // the antidominant chamber: all base positives become negatives
        for (const CoordVec& s : c.simple_roots) {
            int idx = b2.index_of(s);
            CHECK_FALSE(b2.root(idx).positive);
        }
    }
    SUBCASE("functional vanishing everywhere returns the chamber of b") {
        RatVec a{Rat(0), Rat(0)}, b{Rat(1), Rat(1)};
        std::vector<int> all_simple{b2.simple_root(0), b2.simple_root(1)};
        Chamber c = extend_to_simple_system(b2, all_simple, a, b);
        CHECK(c.word.empty());
        CHECK(is_simple_system(b2, c.simple_roots));
    }
    SUBCASE("b not regular on the subsystem is rejected") {
        RatVec a{Rat(0), Rat(1)};
        RatVec b{Rat(0), Rat(1)};  // vanishes on tau
        CHECK_THROWS_AS(extend_to_simple_system(b2, {b2.simple_root(0)}, a, b),
                        validation_error);
    }
    SUBCASE("wrong sub_basis is rejected") {
        RatVec a{Rat(0), Rat(1)}, b{Rat(1), Rat(1)};
        CHECK_THROWS_AS(extend_to_simple_system(b2, {b2.simple_root(1)}, a, b),
                        validation_error);
    }
}

TEST_CASE("is_simple_system rejects mixed-sign decompositions") {
    RootSystem a2 = RootSystem::build('A', 2);
    CHECK(is_simple_system(a2, {CoordVec{1, 0}, CoordVec{0, 1}}));
    CHECK_FALSE(is_simple_system(a2, {CoordVec{1, 0}, CoordVec{1, 1}}));
    CHECK(is_simple_system(a2, {CoordVec{-1, 0}, CoordVec{0, -1}}));
}
