#include "intlin/abelian.hpp"
#include "intlin/f2.hpp"
#include "intlin/normal_forms.hpp"

#include <doctest.h>

#include <random>

using namespace intlin;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long long max_entry) {
    std::size_t r = 1 + rng() % max_dim, c = 1 + rng() % max_dim;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<long long>(rng() % (2 * max_entry + 1)) - max_entry;
    return m;
}

void check_snf_certificate(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    Int du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    IntVec diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        else CHECK(diag[i + 1] == 0);
    }
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on pinned inputs") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix{{2}}).d == IntMatrix{{2}});

    // this exact matrix shows up as the sigma-stack of the rank-two example
    SmithResult s = smith_normal_form(IntMatrix{{2, 0}, {2, 0}});
    IntVec diag = s.diagonal();
    REQUIRE(diag.size() == 2);
    CHECK(diag[0] == 2);
    CHECK(diag[1] == 0);
    CHECK(s.u * IntMatrix{{2, 0}, {2, 0}} * s.v == s.d);
}

TEST_CASE("smith normal form certificates on random matrices") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 60; ++n) check_snf_certificate(random_matrix(rng, 6, 30));
    check_snf_certificate(IntMatrix(3, 3));  // zero matrix
    check_snf_certificate(IntMatrix{{0, 0, 5}});
}

TEST_CASE("hermite basis") {
    SUBCASE("index-two sublattice") {
        IntMatrix h = hermite_basis({{2, 0}, {0, 2}, {1, 1}}, 2);
        REQUIRE(h.rows() == 2);
        Int d = det(h);
        CHECK((d == 2 || d == -2));
        CHECK(lattice_member(h, IntVec{1, 1}));
        CHECK(lattice_member(h, IntVec{2, 0}));
        CHECK(lattice_member(h, IntVec{3, 1}));
        CHECK_FALSE(lattice_member(h, IntVec{1, 0}));
    }
    SUBCASE("empty and standard") {
        CHECK(hermite_basis({}, 3).rows() == 0);
        CHECK(hermite_basis({{1, 0}, {0, 1}}, 2) == IntMatrix::identity(2));
    }
    SUBCASE("canonical form is unique per lattice") {
        IntMatrix a = hermite_basis({{3, 1}, {1, 2}}, 2);
        IntMatrix b = hermite_basis({{1, 2}, {3, 1}, {4, 3}}, 2);
        CHECK(a == b);
    }
}

TEST_CASE("lattice intersect coordinate subspace") {
    SUBCASE("full lattice") {
        IntMatrix r = lattice_intersect_coordinate_subspace(IntMatrix::identity(2), {0});
        CHECK(r == IntMatrix{{1, 0}});
    }
    SUBCASE("skew sublattice") {
        IntMatrix basis = hermite_basis({{1, 1}, {0, 2}}, 2);
        IntMatrix r = lattice_intersect_coordinate_subspace(basis, {0});
        CHECK(r == IntMatrix{{2, 0}});
    }
    SUBCASE("even-sum lattice against a box oracle") {
        // vectors of Z^3 with even coordinate sum, kept coordinates {0,1}
        IntMatrix basis = hermite_basis({{1, 1, 0}, {0, 1, 1}, {2, 0, 0}}, 3);
        IntMatrix r = lattice_intersect_coordinate_subspace(basis, {0, 1});
        for (long long x = -4; x <= 4; ++x)
            for (long long y = -4; y <= 4; ++y) {
                bool in_lattice = (x + y) % 2 == 0;
                CHECK(lattice_member(r, IntVec{x, y, 0}) == in_lattice);
            }
        for (std::size_t i = 0; i < r.rows(); ++i) CHECK(r(i, 2) == 0);
    }
}

TEST_CASE("torsion invariants") {
    CHECK(torsion_invariants(IntMatrix{{2, 0}, {0, 2}}) == FiniteAbelianGroup::z2_power(2));
    CHECK(torsion_invariants(IntMatrix(2, 2)).trivial());
    CHECK(torsion_invariants(IntMatrix{{2, 0}, {2, 0}}) == FiniteAbelianGroup::z2_power(1));

    SUBCASE("invariant under row permutation and redundant rows") {
        std::mt19937_64 rng(11);
        for (int n = 0; n < 20; ++n) {
            IntMatrix m = random_matrix(rng, 4, 8);
            FiniteAbelianGroup base = torsion_invariants(m);

            IntMatrix perm(m.rows(), m.cols());
            std::vector<std::size_t> order(m.rows());
            for (std::size_t i = 0; i < m.rows(); ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) perm(i, j) = m(order[i], j);
            CHECK(torsion_invariants(perm) == base);

            IntMatrix extended(m.rows() + 1, m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) extended(i, j) = m(i, j);
            for (std::size_t j = 0; j < m.cols(); ++j)
                extended(m.rows(), j) = m(0, j) * 3 - (m.rows() > 1 ? m(1, j) : Int(0));
            CHECK(torsion_invariants(extended) == base);
        }
    }
}

TEST_CASE("f2 nullspace") {
    CHECK(f2_nullspace(F2Matrix(2, 3)).size() == 3);
    CHECK(f2_nullspace(F2Matrix::from_rows({1, 2, 4}, 3)).empty());
    auto parity = f2_nullspace(F2Matrix::from_rows({0b11}, 2));
    REQUIRE(parity.size() == 1);
    CHECK(parity[0] == 0b11);

    SUBCASE("rank plus nullity is the column count") {
        std::mt19937_64 rng(13);
        for (int n = 0; n < 40; ++n) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
            std::vector<std::uint64_t> data;
            for (std::size_t i = 0; i < rows; ++i) data.push_back(rng() & ((1u << cols) - 1));
            F2Matrix m = F2Matrix::from_rows(data, cols);
            CHECK(m.rank() + f2_nullspace(m).size() == cols);
        }
    }
}

TEST_CASE("rational solve") {
    auto id = std::vector<RatVec>{{1, 0}, {0, 1}};
    auto r = rational_solve(id, {Rat(5), Rat(-7)});
    REQUIRE(r.verdict == SolveVerdict::unique);
    CHECK(r.solution == RatVec{5, -7});

    r = rational_solve({{Rat(2)}}, {Rat(3)});
    REQUIRE(r.verdict == SolveVerdict::unique);
    CHECK(r.solution[0] == Rat(3, 2));

    // Gram matrix of a single long root, norm normalised to 2
    r = rational_solve({{Rat(2)}}, {Rat(2)});
    REQUIRE(r.verdict == SolveVerdict::unique);
    CHECK(r.solution[0] == 1);

    CHECK(rational_solve({{Rat(1), Rat(1)}}, {Rat(1)}).verdict ==
          SolveVerdict::underdetermined);
    CHECK(rational_solve({{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)}).verdict == SolveVerdict::none);
    CHECK(rational_solve({{Rat(0)}, {Rat(2)}}, {Rat(0), Rat(4)}).verdict ==
          SolveVerdict::unique);
}

TEST_CASE("determinants") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{2, 0}, {2, 0}}) == 0);
    CHECK(det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}
