#include "realform/catalog.hpp"
#include "realform/satake.hpp"

#include "support/errors.hpp"

#include <doctest.h>

#include <random>

using namespace realform;
using support::validation_error;

namespace {

const SatakeDatum kRankTwoSwap{'B', 2, {0}, {}, "rank-two-swap"};  // black long root

}  // namespace

TEST_CASE("rank-two swap conjugation: k, k', sigma and classification") {
    SigmaAction sa = derive_sigma(kRankTwoSwap);
    REQUIRE(sa.white == std::vector<int>{1});
    REQUIRE(sa.black == std::vector<int>{0});
    CHECK(sa.k[0][0] == 1);
    CHECK(sa.kprime[0][0] == 2);

    // theta-bar = -theta + 2 omega, omega-bar = omega
    CHECK(sa.sigma == intlin::IntMatrix{{-1, 0}, {2, 1}});

    const rootsys::RootSystem& r = sa.rs();
    CHECK(sa.classify(r.simple_root(0)) == RootClass::imaginary);   // tau
    CHECK(sa.classify(r.simple_root(1)) == RootClass::complex_root);  // beta
    int real_root = r.index_of({1, 2});  // tau + 2 beta = e1 + e2
    REQUIRE(real_root >= 0);
    CHECK(sa.classify(real_root) == RootClass::real);
    CHECK(sa.sigma_root(r.simple_root(1)) == r.index_of({1, 1}));  // beta -> beta + tau

    auto counts = sa.class_counts();
    CHECK(counts == std::array<std::size_t, 3>{2, 2, 4});
    CHECK(sa.fixed_omegas == std::vector<int>{1});
}

TEST_CASE("split and compact extremes") {
    SigmaAction split = derive_sigma({'C', 3, {}, {}, ""});
    CHECK(split.sigma == intlin::IntMatrix::identity(3));
    for (auto c : split.classification) CHECK(c == RootClass::real);

    SigmaAction compact = derive_sigma({'E', 8, {0, 1, 2, 3, 4, 5, 6, 7}, {}, ""});
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(compact.sigma(i, j) == (i == j ? -1 : 0));
    for (auto c : compact.classification) CHECK(c == RootClass::imaginary);
    CHECK(compact.fixed_omegas.empty());
}

TEST_CASE("validate_satake") {
    SUBCASE("the rank-two swap datum passes all checks") {
        CheckReport rep = validate_satake(kRankTwoSwap);
        CHECK(rep.all_pass());
        CHECK(rep.items.size() >= 9);
    }
    SUBCASE("adjacent black pair with a white neighbour fails k-integrality") {
        CheckReport rep = validate_satake({'A', 3, {0, 1}, {}, ""});
        CHECK_FALSE(rep.all_pass());
        bool found = false;
        for (const auto& item : rep.items)
            if (item.name == "k-integral-nonnegative" && !item.pass) found = true;
        CHECK(found);
    }
    SUBCASE("single black node on A2 is a valid (non-classified) conjugation") {
        // sigma comes out as the reflection in the black root; it is realized
        // by the intermediate Cartan subalgebra of the split form
        CheckReport rep = validate_satake({'A', 2, {0}, {}, ""});
        CHECK(rep.all_pass());
        SigmaAction sa = derive_sigma({'A', 2, {0}, {}, ""});
        CHECK(sa.sigma_root(sa.rs().simple_root(0)) == sa.rs().negate(sa.rs().simple_root(0)));
        CHECK(sa.classify(sa.rs().simple_root(1)) == RootClass::complex_root);
    }
    SUBCASE("arrow breaking the Cartan block is rejected") {
        CheckReport rep = validate_satake({'A', 3, {}, {{0, 1}}, ""});
        CHECK_FALSE(rep.all_pass());
    }
    SUBCASE("derive_sigma throws with the failing certificate") {
        CHECK_THROWS_AS(derive_sigma({'A', 3, {0, 1}, {}, ""}), validation_error);
    }
}

TEST_CASE("catalog lookups") {
    const Catalog& cat = Catalog::standard();
    CHECK(cat.entries().size() >= 40);

    const CatalogEntry* sl3 = cat.find("sl(3,R)");
    REQUIRE(sl3 != nullptr);
    CHECK(sl3->datum.series == 'A');
    CHECK(sl3->datum.rank == 2);
    CHECK(sl3->datum.black.empty());
    CHECK(sl3->datum.arrows.empty());

    const CatalogEntry* su21 = cat.find("su(2,1)");
    REQUIRE(su21 != nullptr);
    CHECK(su21->datum.black.empty());
    REQUIRE(su21->datum.arrows.size() == 1);
    CHECK(su21->datum.arrows[0] == std::pair<int, int>{0, 1});

    const CatalogEntry* sp2dual = cat.find("sp(2,R)-compact-dual");
    REQUIRE(sp2dual != nullptr);
    CHECK(sp2dual->datum.series == 'C');
    CHECK(sp2dual->datum.black == std::vector<int>{0, 1});

    CHECK(cat.find("G2-compact") != nullptr);
    CHECK(cat.find("so*(8)") != nullptr);
    CHECK(cat.find("su*(6)") != nullptr);

    SUBCASE("unknown names are rejected with the available list") {
        try {
            cat.realize("sl(99,R)");
            FAIL("expected rejection");
        } catch (const validation_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("sl(3,R)") != std::string::npos);
        }
    }
    SUBCASE("realization is deterministic") {
        SigmaAction a = cat.realize("so(3,5)");
        SigmaAction b = cat.realize("so(3,5)");
        CHECK(a.sigma == b.sigma);
        CHECK(a.k == b.k);
    }
}

TEST_CASE("sigma preserves the pairing") {
    std::mt19937_64 rng(23);
    for (const char* name : {"su(3,2)", "so(2,5)", "sp(1,2)", "su*(6)"}) {
        SigmaAction sa = Catalog::standard().realize(name);
        const rootsys::RootSystem& r = sa.rs();
        const int l = r.rank();
        for (int n = 0; n < 10; ++n) {
            rootsys::CoordVec lambda(l);
            for (int i = 0; i < l; ++i) lambda[i] = static_cast<long long>(rng() % 9) - 4;
            rootsys::CoordVec slambda = sa.sigma_weight(lambda);
            for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
                int sidx = sa.sigma_root(static_cast<int>(idx));
                CHECK(r.pairing(slambda, sidx) == r.pairing(lambda, static_cast<int>(idx)));
            }
        }
    }
}

TEST_CASE("fixed weight count equals the arrow-fixed white nodes") {
    for (const auto& e : Catalog::standard().entries()) {
        if (e.datum.rank > 5) continue;
        SigmaAction sa = derive_sigma(e.datum);
        std::size_t expect = 0;
        for (int i : sa.white)
            if (sa.jmap[i] == i) ++expect;
        CHECK(sa.fixed_omegas.size() == expect);
    }
}

TEST_CASE("positive non-imaginary roots keep their sign under sigma") {
    for (const auto& e : Catalog::standard().entries()) {
        if (e.datum.rank > 4) continue;
        SigmaAction sa = derive_sigma(e.datum);
        const rootsys::RootSystem& r = sa.rs();
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
            if (!r.root(static_cast<int>(idx)).positive) continue;
            if (sa.classify(static_cast<int>(idx)) == RootClass::imaginary) continue;
            CHECK(r.root(sa.sigma_root(static_cast<int>(idx))).positive);
        }
    }
}
