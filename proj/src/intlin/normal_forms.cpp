#include "intlin/normal_forms.hpp"

#include <algorithm>
#include <cstdlib>

namespace intlin {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// floor division (round toward minus infinity)
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SmithResult res{IntMatrix::identity(nr), m, IntMatrix::identity(nc)};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t n = std::min(nr, nc);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix becomes the pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (a(i, j) == 0) continue;
                    Int ab = abs_int(a(i, j));
                    if (!found || ab < best) {
                        found = true;
                        best = ab;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return res;  // trailing submatrix is zero
            if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
            if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }

            const Int p = a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / p;
                if (q != 0) { a.add_row(i, t, -q); u.add_row(i, t, -q); }
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / p;
                if (q != 0) { a.add_col(j, t, -q); v.add_col(j, t, -q); }
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders are smaller; repeat with a new pivot

            // pivot must divide every remaining entry to keep the chain
            bool divides = true;
            std::size_t bad = t;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a(i, j) % p != 0) {
                        divides = false;
                        bad = i;
                        break;
                    }
            if (!divides) {
                a.add_row(t, bad, Int(1));
                u.add_row(t, bad, Int(1));
                continue;
            }
            break;
        }
        if (a(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
    }
    return res;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix hermite_basis(const IntMatrix& gens) {
    IntMatrix a = gens;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        for (;;) {
            bool found = false;
            std::size_t pi = r;
            Int best;
            for (std::size_t i = r; i < nr; ++i) {
                if (a(i, col) == 0) continue;
                Int ab = abs_int(a(i, col));
                if (!found || ab < best) {
                    found = true;
                    best = ab;
                    pi = i;
                }
            }
            if (!found) goto next_col;
            if (pi != r) a.swap_rows(r, pi);
            {
                bool clean = true;
                for (std::size_t i = r + 1; i < nr; ++i) {
                    if (a(i, col) == 0) continue;
                    Int q = a(i, col) / a(r, col);
                    if (q != 0) a.add_row(i, r, -q);
                    if (a(i, col) != 0) clean = false;
                }
                if (clean) break;
            }
        }
        if (a(r, col) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a(i, col), a(r, col));
            if (q != 0) a.add_row(i, r, -q);
        }
        ++r;
    next_col:;
    }
    IntMatrix out(r, nc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(i, j);
    return out;
}

IntMatrix hermite_basis(const std::vector<IntVec>& gens, std::size_t cols) {
    return hermite_basis(IntMatrix::from_rows(gens, cols));
}

bool lattice_member(const IntMatrix& hermite, std::span<const Int> v) {
    if (v.size() != hermite.cols()) throw std::invalid_argument("lattice_member: length mismatch");
    IntVec w(v.begin(), v.end());
    for (std::size_t r = 0; r < hermite.rows(); ++r) {
        std::size_t pc = 0;
        while (pc < hermite.cols() && hermite(r, pc) == 0) ++pc;
        if (pc == hermite.cols()) continue;
        if (w[pc] == 0) continue;
        if (w[pc] % hermite(r, pc) != 0) return false;
        Int q = w[pc] / hermite(r, pc);
        for (std::size_t j = pc; j < hermite.cols(); ++j) w[j] -= q * hermite(r, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

IntMatrix integer_row_kernel(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    IntVec diag = s.diagonal();
    std::size_t rank = 0;
    for (const Int& d : diag)
        if (d != 0) ++rank;
    IntMatrix out(m.rows() - rank, m.rows());
    for (std::size_t i = rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out(i - rank, j) = s.u(i, j);
    return out;
}

IntMatrix lattice_intersect_coordinate_subspace(const IntMatrix& basis,
                                                const std::vector<std::size_t>& keep) {
    std::vector<bool> keep_mask(basis.cols(), false);
    for (std::size_t j : keep) {
        if (j >= basis.cols())
            throw std::invalid_argument("lattice_intersect_coordinate_subspace: index out of range");
        keep_mask[j] = true;
    }
    std::vector<std::size_t> dropped;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        if (!keep_mask[j]) dropped.push_back(j);

    IntMatrix restricted(basis.rows(), dropped.size());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < dropped.size(); ++j) restricted(i, j) = basis(i, dropped[j]);

    IntMatrix kernel = integer_row_kernel(restricted);
    IntMatrix rows = kernel * basis;
    return hermite_basis(rows);
}

FiniteAbelianGroup torsion_invariants(const IntMatrix& k) {
    FiniteAbelianGroup g;
    if (k.rows() == 0 || k.cols() == 0) return g;
    SmithResult s = smith_normal_form(k);
    for (const Int& d : s.diagonal())
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

RationalSolveResult rational_solve(const std::vector<RatVec>& a, const RatVec& b) {
    const std::size_t nr = a.size();
    if (b.size() != nr) throw std::invalid_argument("rational_solve: rhs length mismatch");
    const std::size_t nc = nr ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != nc) throw std::invalid_argument("rational_solve: ragged matrix");

    std::vector<RatVec> w = a;
    RatVec rhs = b;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t pi = r;
        while (pi < nr && w[pi][col] == 0) ++pi;
        if (pi == nr) continue;
        std::swap(w[r], w[pi]);
        std::swap(rhs[r], rhs[pi]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || w[i][col] == 0) continue;
            Rat f = w[i][col] / w[r][col];
            for (std::size_t j = col; j < nc; ++j) w[i][j] -= f * w[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (rhs[i] != 0) return {SolveVerdict::none, {}};
    if (r < nc) return {SolveVerdict::underdetermined, {}};

    RatVec x(nc);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / w[i][pivot_col[i]];
    return {SolveVerdict::unique, std::move(x)};
}

}  // namespace intlin
