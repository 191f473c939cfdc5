#pragma once

#include "intlin/abelian.hpp"
#include "intlin/int_matrix.hpp"

#include <optional>
#include <vector>

namespace intlin {

/// u * m * v = d, with u and v unimodular and d diagonal, d1 | d2 | ... >= 0.
struct SmithResult {
    IntMatrix u, d, v;
    IntVec diagonal() const {
        IntVec out;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
        return out;
    }
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int det(const IntMatrix& m);

/// Canonical basis of the lattice generated by the given row vectors:
/// row-style Hermite form with positive pivots and entries above each pivot
/// reduced into [0, pivot).  Zero rows are dropped; the result has one row per
/// basis vector, in echelon order.
IntMatrix hermite_basis(const std::vector<IntVec>& gens, std::size_t cols);
IntMatrix hermite_basis(const IntMatrix& gens);

/// Membership of v in the row lattice of an echelon (Hermite) basis.
bool lattice_member(const IntMatrix& hermite, std::span<const Int> v);

/// Basis of { x in row-lattice(basis) : x_j = 0 for all j outside keep }.
/// Computed through the integer kernel of the dropped coordinates.
IntMatrix lattice_intersect_coordinate_subspace(const IntMatrix& basis,
                                                const std::vector<std::size_t>& keep);

/// Basis of the integer kernel { x : x^T m = 0 } as rows.
IntMatrix integer_row_kernel(const IntMatrix& m);

/// Invariant factors > 1 of Z^cols / row-lattice(k).
FiniteAbelianGroup torsion_invariants(const IntMatrix& k);

enum class SolveVerdict { unique, none, underdetermined };

struct RationalSolveResult {
    SolveVerdict verdict;
    RatVec solution;  // populated only for the unique verdict
};

/// Exact Gaussian elimination on a x = b.
RationalSolveResult rational_solve(const std::vector<RatVec>& a, const RatVec& b);

}  // namespace intlin
