#include "charcomp/charcomp.hpp"

#include "realform/catalog.hpp"
#include "support/errors.hpp"

#include <doctest.h>

using namespace charcomp;
using intlin::FiniteAbelianGroup;
using intlin::IntMatrix;
using intlin::IntVec;
using realform::SigmaAction;
using support::validation_error;

namespace {

SigmaAction rank_two_swap() { return realform::derive_sigma({'B', 2, {0}, {}, ""}); }

SigmaAction split(char series, int rank) {
    return realform::derive_sigma({series, rank, {}, {}, ""});
}

SigmaAction compact(char series, int rank) {
    std::vector<int> all(rank);
    for (int i = 0; i < rank; ++i) all[i] = i;
    return realform::derive_sigma({series, rank, all, {}, ""});
}

}  // namespace

TEST_CASE("lattice realization") {
    SigmaAction sa = rank_two_swap();
    Lattice full = realize(LatticeSpec::full(), sa);
    Lattice root = realize(LatticeSpec::root(), sa);
    CHECK(full.contains(root));
    CHECK_FALSE(root.contains(full));
    // omega = second fundamental weight is outside the root lattice
    CHECK_FALSE(root.member(rootsys::CoordVec{0, 1}));
    CHECK(root.member(rootsys::CoordVec{0, 2}));
    CHECK(full.member(rootsys::CoordVec{0, 1}));

    SUBCASE("generated lattice equal to the root lattice") {
        Lattice gen = realize(LatticeSpec::generated({}), sa);
        CHECK(gen.basis == root.basis);
    }
    SUBCASE("sigma-unstable generated lattice is rejected") {
        SigmaAction so35 = realform::Catalog::standard().realize("so(3,5)");
        IntVec omega3(4, 0);
        omega3[2] = 1;
        CHECK_THROWS_AS(realize(LatticeSpec::generated({omega3}), so35), validation_error);
        IntVec omega1(4, 0);
        omega1[0] = 1;
        CHECK_NOTHROW(realize(LatticeSpec::generated({omega1}), so35));
    }
}

TEST_CASE("sign-parity group A") {
    SUBCASE("rank-two swap: one fixed weight, vacuous parity condition") {
        F2Subspace a = group_A(rank_two_swap());
        CHECK(a.ambient == 1);
        CHECK(a.dim() == 1);
    }
    SUBCASE("compact form: no fixed weights") {
        F2Subspace a = group_A(compact('B', 2));
        CHECK(a.ambient == 0);
        CHECK(a.dim() == 0);
    }
    SUBCASE("split A2: no conditions at all") {
        F2Subspace a = group_A(split('A', 2));
        CHECK(a.ambient == 2);
        CHECK(a.dim() == 2);
    }
    SUBCASE("odd k-prime entry forces a genuine condition") {
        // white-long black-short on B2: k' = 1, so A = 0
        SigmaAction sa = realform::derive_sigma({'B', 2, {1}, {}, ""});
        CHECK(sa.kprime[0][0] == 1);
        CHECK(group_A(sa).dim() == 0);
    }
}

TEST_CASE("A_L and the Cartan component quotient") {
    SigmaAction sa = rank_two_swap();
    Lattice full = realize(LatticeSpec::full(), sa);
    Lattice root = realize(LatticeSpec::root(), sa);

    CHECK(group_A_L(sa, full).dim() == 0);
    CHECK(group_A_L(sa, root).dim() == 1);

    ComponentGroupResult pi_full = pi0_cartan(sa, full);
    CHECK(pi_full.group == FiniteAbelianGroup::z2_power(1));
    REQUIRE(pi_full.sign_flip_nodes.size() == 1);
    CHECK(pi_full.sign_flip_nodes[0] == std::vector<int>{1});  // the white node

    CHECK(pi0_cartan(sa, root).group.trivial());

    SUBCASE("split A1 with the full lattice") {
        SigmaAction a1 = split('A', 1);
        CHECK(group_A_L(a1, realize(LatticeSpec::full(), a1)).dim() == 0);
        CHECK(pi0_cartan(a1, realize(LatticeSpec::full(), a1)).group ==
              FiniteAbelianGroup::z2_power(1));
    }
    SUBCASE("split series against the classical sign count") {
        for (int n = 2; n <= 7; ++n) {
            SigmaAction s = split('A', n - 1);
            Lattice l = realize(LatticeSpec::full(), s);
            CHECK(pi0_cartan(s, l).group == FiniteAbelianGroup::z2_power(n - 1));
        }
    }
    SUBCASE("adjoint lattice of the split rank-two form keeps all components") {
        // the quotient of the weight lattice by the root lattice has odd order
        // here, so restriction kills nothing
        SigmaAction a2 = split('A', 2);
        CHECK(pi0_cartan(a2, realize(LatticeSpec::root(), a2)).group ==
              FiniteAbelianGroup::z2_power(2));
    }
}

TEST_CASE("character component group via the sigma stack") {
    SUBCASE("rank-two swap with no vanishing conditions") {
        SigmaAction sa = rank_two_swap();
        CharacterTorsionResult res = character_component_group(sa.sigma, {});
        CHECK(res.group == FiniteAbelianGroup::z2_power(1));
        REQUIRE(res.phase_generators.size() == 1);
        // the phase generator must pair half-integrally with the lattice
        const auto& phase = res.phase_generators[0];
        bool half_seen = false;
        for (const auto& x : phase)
            if (denominator(x) == 2) half_seen = true;
        CHECK(half_seen);
    }
    SUBCASE("compact: sigma stack vanishes") {
        SigmaAction sa = compact('G', 2);
        CHECK(pi0_fixed_character_subgroup(sa.sigma, {}).trivial());
    }
    SUBCASE("split A1 with its weight killed") {
        SigmaAction sa = split('A', 1);
        CHECK(pi0_fixed_character_subgroup(sa.sigma, {IntVec{1}}).trivial());
    }
    SUBCASE("two-path agreement across the catalog") {
        for (const auto& e : realform::Catalog::standard().entries()) {
            if (e.datum.rank > 4) continue;
            SigmaAction sa = realform::derive_sigma(e.datum);
            FiniteAbelianGroup torsion = pi0_fixed_character_subgroup(sa.sigma, {});
            CHECK(torsion == FiniteAbelianGroup::z2_power(group_A(sa).dim()));
        }
    }
}

TEST_CASE("brute-force oracle") {
    SigmaAction sa = rank_two_swap();
    CHECK(brute_force_pi0(sa, realize(LatticeSpec::full(), sa)) ==
          FiniteAbelianGroup::z2_power(1));
    CHECK(brute_force_pi0(sa, realize(LatticeSpec::root(), sa)).trivial());

    for (int n = 2; n <= 5; ++n) {
        SigmaAction s = split('A', n - 1);
        CHECK(brute_force_pi0(s, realize(LatticeSpec::full(), s)) ==
              FiniteAbelianGroup::z2_power(n - 1));
    }
    SigmaAction cpt = compact('C', 3);
    CHECK(brute_force_pi0(cpt, realize(LatticeSpec::full(), cpt)).trivial());
    CHECK(brute_force_pi0(cpt, realize(LatticeSpec::root(), cpt)).trivial());

    SUBCASE("odd quotient exponent needs the doubled coefficient box") {
        SigmaAction a2 = split('A', 2);
        CHECK(brute_force_pi0(a2, realize(LatticeSpec::root(), a2)) ==
              FiniteAbelianGroup::z2_power(2));
    }
    SUBCASE("desk-scale bound") {
        SigmaAction big = split('A', 17);
        CHECK_THROWS_AS(brute_force_pi0(big, realize(LatticeSpec::full(), big)),
                        validation_error);
    }
}

TEST_CASE("intermediate lattice enumeration") {
    SUBCASE("split D4: all five subgroups are stable") {
        CHECK(all_intermediate_lattices(split('D', 4)).size() == 5);
    }
    SUBCASE("so(3,5): the fork swap kills the two chiral lattices") {
        SigmaAction sa = realform::Catalog::standard().realize("so(3,5)");
        CHECK(all_intermediate_lattices(sa).size() == 3);
    }
    SUBCASE("split A2: only the two extremes") {
        CHECK(all_intermediate_lattices(split('A', 2)).size() == 2);
    }
}

TEST_CASE("restriction monotonicity") {
    for (const char* name : {"A3-split", "su(2,2)", "so(2,5)", "D4-split"}) {
        SigmaAction sa = realform::Catalog::standard().realize(name);
        auto lattices = all_intermediate_lattices(sa);
        for (const Lattice& small : lattices)
            for (const Lattice& large : lattices) {
                if (!large.contains(small)) continue;
                CHECK(group_A_L(sa, small).dim() <= group_A_L(sa, large).dim());
                CHECK(pi0_cartan(sa, small).group.order() >=
                      pi0_cartan(sa, large).group.order());
            }
    }
}

TEST_CASE("every Cartan component group is elementary abelian") {
    for (const auto& e : realform::Catalog::standard().entries()) {
        if (e.datum.rank > 4) continue;
        SigmaAction sa = realform::derive_sigma(e.datum);
        for (const Lattice& l : all_intermediate_lattices(sa))
            for (const intlin::Int& f : pi0_cartan(sa, l).group.invariant_factors)
                CHECK(f == 2);
    }
}
