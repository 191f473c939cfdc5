#include "charcomp/charcomp.hpp"

#include "intlin/normal_forms.hpp"
#include "support/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace charcomp {

using intlin::F2Matrix;
using intlin::FiniteAbelianGroup;
using intlin::Int;
using intlin::IntMatrix;
using intlin::IntVec;
using realform::SigmaAction;
using rootsys::CoordVec;
using support::validation_error;

bool Lattice::member(std::span<const Int> v) const { return intlin::lattice_member(basis, v); }

bool Lattice::member(const CoordVec& v) const {
    IntVec w(v.begin(), v.end());
    return member(std::span<const Int>(w));
}

bool Lattice::contains(const Lattice& other) const {
    for (std::size_t i = 0; i < other.basis.rows(); ++i)
        if (!member(other.basis.row(i))) return false;
    return true;
}

IntMatrix root_lattice_basis(const rootsys::RootSystem& r) {
    const int l = r.rank();
    std::vector<IntVec> gens;
    for (int j = 0; j < l; ++j) {
        IntVec col(l);
        for (int i = 0; i < l; ++i) col[i] = r.cartan()[i][j];
        gens.push_back(std::move(col));
    }
    return intlin::hermite_basis(gens, l);
}

Lattice realize(const LatticeSpec& spec, const SigmaAction& sa) {
    const rootsys::RootSystem& r = sa.rs();
    const int l = r.rank();
    Lattice out;
    switch (spec.kind) {
        case LatticeSpec::Kind::full:
            out.basis = IntMatrix::identity(l);
            return out;
        case LatticeSpec::Kind::root:
            out.basis = root_lattice_basis(r);
            return out;
        case LatticeSpec::Kind::generated: {
            std::vector<IntVec> gens;
            IntMatrix lambda = root_lattice_basis(r);
            for (std::size_t i = 0; i < lambda.rows(); ++i) gens.push_back(lambda.row_vec(i));
            for (const IntVec& g : spec.generators) {
                if (static_cast<int>(g.size()) != l)
                    throw validation_error("lattice generator has wrong length");
                gens.push_back(g);
            }
            out.basis = intlin::hermite_basis(gens, l);
            // sigma-stability: images of the basis stay inside
            for (std::size_t i = 0; i < out.basis.rows(); ++i) {
                IntVec img = sa.sigma.mul_vec(out.basis.row(i));
                if (!out.member(std::span<const Int>(img)))
                    throw validation_error("lattice is not sigma-stable");
            }
            return out;
        }
    }
    throw validation_error("unreachable lattice kind");
}

namespace {

/// positions of the fixed weights among all nodes, plus white-position lookup
struct FixedIndexing {
    std::vector<int> fixed;     // node ids, ascending
    std::vector<int> whitepos;  // node id -> position in sa.white, or -1
};

FixedIndexing fixed_indexing(const SigmaAction& sa) {
    FixedIndexing fi;
    fi.fixed = sa.fixed_omegas;
    fi.whitepos.assign(sa.rs().rank(), -1);
    for (std::size_t w = 0; w < sa.white.size(); ++w) fi.whitepos[sa.white[w]] = static_cast<int>(w);
    return fi;
}

/// parity-condition rows of A: one row per black node, columns over fixed nodes
std::vector<std::uint64_t> kprime_parity_rows(const SigmaAction& sa, const FixedIndexing& fi) {
    std::vector<std::uint64_t> rows;
    const std::size_t b = sa.black.size();
    for (std::size_t q = 0; q < b; ++q) {
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < fi.fixed.size(); ++c) {
            int wp = fi.whitepos[fi.fixed[c]];
            if (sa.kprime[wp][q] & 1) mask |= std::uint64_t{1} << c;
        }
        rows.push_back(mask);
    }
    return rows;
}

/// parity masks (over fixed coordinates) of L ∩ span{omega_i : i fixed}
std::vector<std::uint64_t> lattice_parity_rows(const SigmaAction& sa, const Lattice& l,
                                               const FixedIndexing& fi) {
    std::vector<std::size_t> keep(fi.fixed.begin(), fi.fixed.end());
    IntMatrix inter = intlin::lattice_intersect_coordinate_subspace(l.basis, keep);
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < inter.rows(); ++i) {
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < fi.fixed.size(); ++c)
            if (inter(i, fi.fixed[c]) % 2 != 0) mask |= std::uint64_t{1} << c;
        rows.push_back(mask);
    }
    return rows;
}

}  // namespace

F2Subspace group_A(const SigmaAction& sa) {
    FixedIndexing fi = fixed_indexing(sa);
    const std::size_t c = fi.fixed.size();
    F2Matrix m = F2Matrix::from_rows(kprime_parity_rows(sa, fi), c);
    F2Subspace out;
    out.ambient = c;
    out.basis = intlin::f2_row_basis(intlin::f2_nullspace(m));
    return out;
}

F2Subspace group_A_L(const SigmaAction& sa, const Lattice& l) {
    FixedIndexing fi = fixed_indexing(sa);
    const std::size_t c = fi.fixed.size();
    std::vector<std::uint64_t> rows = kprime_parity_rows(sa, fi);
    for (std::uint64_t m : lattice_parity_rows(sa, l, fi)) rows.push_back(m);
    F2Matrix m = F2Matrix::from_rows(rows, c);
    F2Subspace out;
    out.ambient = c;
    out.basis = intlin::f2_row_basis(intlin::f2_nullspace(m));
    return out;
}

ComponentGroupResult pi0_cartan(const SigmaAction& sa, const Lattice& l) {
    FixedIndexing fi = fixed_indexing(sa);
    F2Subspace a = group_A(sa);
    F2Subspace al = group_A_L(sa, l);

    // complete a basis of A_L to a basis of A; the added vectors represent
    // the quotient generators
    std::vector<std::uint64_t> span = al.basis;
    ComponentGroupResult out;
    for (std::uint64_t v : a.basis) {
        if (intlin::f2_span_contains(span, v)) continue;
        span.push_back(v);
        std::vector<int> nodes;
        for (std::size_t c = 0; c < fi.fixed.size(); ++c)
            if ((v >> c) & 1u) nodes.push_back(fi.fixed[c]);
        out.sign_flip_nodes.push_back(std::move(nodes));
    }
    out.group = FiniteAbelianGroup::z2_power(out.sign_flip_nodes.size());
    return out;
}

CharacterTorsionResult character_component_group(const IntMatrix& sigma,
                                                 const std::vector<IntVec>& vanish) {
    const std::size_t l = sigma.rows();
    if (sigma.cols() != l) throw validation_error("sigma matrix must be square");
    IntMatrix k(l + vanish.size(), l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) k(i, j) = sigma(j, i) + (i == j ? 1 : 0);
    for (std::size_t r = 0; r < vanish.size(); ++r) {
        if (vanish[r].size() != l) throw validation_error("vanishing vector has wrong length");
        for (std::size_t j = 0; j < l; ++j) k(l + r, j) = vanish[r][j];
    }

    intlin::SmithResult snf = intlin::smith_normal_form(k);
    CharacterTorsionResult out;
    intlin::IntVec diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] <= 1) continue;
        out.group.invariant_factors.push_back(diag[i]);
        intlin::RatVec phase(l);
        for (std::size_t j = 0; j < l; ++j)
            phase[j] = intlin::Rat(snf.v(j, i), diag[i]);
        out.phase_generators.push_back(std::move(phase));
    }
    return out;
}

FiniteAbelianGroup pi0_fixed_character_subgroup(const IntMatrix& sigma,
                                                const std::vector<IntVec>& vanish) {
    return character_component_group(sigma, vanish).group;
}

FiniteAbelianGroup brute_force_pi0(const SigmaAction& sa, const Lattice& l) {
    FixedIndexing fi = fixed_indexing(sa);
    const std::size_t c = fi.fixed.size();
    if (c > 16) throw validation_error("brute_force_pi0: more than 16 fixed weights");
    const int rank = sa.rs().rank();

    // A membership straight from the k' parities
    std::vector<std::uint64_t> arows = kprime_parity_rows(sa, fi);
    auto in_a = [&](std::uint64_t eta) {
        for (std::uint64_t row : arows)
            if (intlin::popcount64(row & eta) & 1) return false;
        return true;
    };

    // coefficient box: parity and quotient class must both be exhausted
    IntMatrix lambda = root_lattice_basis(sa.rs());
    long long exponent = 1;
    {
        FiniteAbelianGroup q = intlin::torsion_invariants(lambda);
        if (!q.invariant_factors.empty())
            exponent = q.invariant_factors.back().convert_to<long long>();
    }
    long long box = exponent % 2 == 0 ? exponent : 2 * exponent;

    // small-integer copy of the basis for the hot membership loop
    std::vector<std::vector<long long>> hb;
    std::vector<int> pivot;
    for (std::size_t i = 0; i < l.basis.rows(); ++i) {
        std::vector<long long> row(rank);
        for (int j = 0; j < rank; ++j) row[j] = l.basis(i, j).convert_to<long long>();
        int p = 0;
        while (p < rank && row[p] == 0) ++p;
        hb.push_back(std::move(row));
        pivot.push_back(p);
    }
    auto member_ll = [&](std::vector<long long> v) {
        for (std::size_t i = 0; i < hb.size(); ++i) {
            int p = pivot[i];
            if (p >= rank || v[p] == 0) continue;
            if (v[p] % hb[i][p] != 0) return false;
            long long q = v[p] / hb[i][p];
            for (int j = p; j < rank; ++j) v[j] -= q * hb[i][j];
        }
        return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    };

    // every parity class of coefficients whose weight combination lies in L
    std::set<std::uint64_t> constraints;
    std::vector<long long> k(c, 0);
    std::vector<long long> v(rank, 0);
    for (;;) {
        for (int j = 0; j < rank; ++j) v[j] = 0;
        for (std::size_t i = 0; i < c; ++i) v[fi.fixed[i]] = k[i];
        if (member_ll(v)) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < c; ++i)
                if (k[i] & 1) mask |= std::uint64_t{1} << i;
            constraints.insert(mask);
        }
        std::size_t pos = 0;
        while (pos < c && ++k[pos] == box) k[pos++] = 0;
        if (pos == c) break;
    }

    std::uint64_t count_a = 0, count_al = 0;
    for (std::uint64_t eta = 0; eta < (std::uint64_t{1} << c); ++eta) {
        if (!in_a(eta)) continue;
        ++count_a;
        bool killed = true;
        for (std::uint64_t m : constraints)
            if (intlin::popcount64(m & eta) & 1) {
                killed = false;
                break;
            }
        if (killed) ++count_al;
    }
    if (count_al == 0 || count_a % count_al != 0)
        throw support::defect_error("brute_force_pi0: subgroup counting is inconsistent");
    std::uint64_t quotient = count_a / count_al;
    std::size_t dim = 0;
    while ((std::uint64_t{1} << dim) < quotient) ++dim;
    if ((std::uint64_t{1} << dim) != quotient)
        throw support::defect_error("brute_force_pi0: quotient order is not a power of two");
    return FiniteAbelianGroup::z2_power(dim);
}

std::vector<Lattice> all_intermediate_lattices(const SigmaAction& sa) {
    const rootsys::RootSystem& r = sa.rs();
    const int l = r.rank();
    IntMatrix lambda = root_lattice_basis(r);

    // canonical coset representative against the triangular Hermite basis
    auto reduce = [&](IntVec v) {
        for (int i = 0; i < l; ++i) {
            Int q = v[i] / lambda(i, i);
            if (v[i] % lambda(i, i) < 0) q -= 1;
            if (q != 0)
                for (int j = i; j < l; ++j) v[j] -= q * lambda(i, j);
        }
        return v;
    };

    // all elements of the (small) quotient by box enumeration
    std::vector<IntVec> elements;
    {
        IntVec v(l, 0);
        for (;;) {
            elements.push_back(reduce(v));
            int pos = 0;
            while (pos < l && ++v[pos] == lambda(pos, pos)) v[pos++] = 0;
            if (pos == l) break;
        }
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    }

    auto add = [&](const IntVec& a, const IntVec& b) {
        IntVec s(l);
        for (int j = 0; j < l; ++j) s[j] = a[j] + b[j];
        return reduce(s);
    };

    // subgroups: closures of every generator subset
    std::set<std::vector<IntVec>> subgroups;
    const std::size_t n = elements.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::set<IntVec> closure;
        closure.insert(IntVec(l, 0));
        for (std::size_t i = 0; i < n; ++i)
            if ((bits >> i) & 1) closure.insert(elements[i]);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<IntVec> snapshot(closure.begin(), closure.end());
            for (const IntVec& a : snapshot)
                for (const IntVec& b : snapshot)
                    if (closure.insert(add(a, b)).second) grew = true;
        }
        subgroups.insert(std::vector<IntVec>(closure.begin(), closure.end()));
    }

    std::vector<Lattice> out;
    for (const auto& sub : subgroups) {
        LatticeSpec spec = LatticeSpec::generated({sub.begin(), sub.end()});
        try {
            out.push_back(realize(spec, sa));
        } catch (const validation_error&) {
            // not sigma-stable; skip
        }
    }
    auto mat_less = [](const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        if (a.cols() != b.cols()) return a.cols() < b.cols();
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
        return false;
    };
    std::sort(out.begin(), out.end(),
              [&](const Lattice& a, const Lattice& b) { return mat_less(a.basis, b.basis); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Lattice& a, const Lattice& b) { return a.basis == b.basis; }),
              out.end());
    return out;
}

}  // namespace charcomp
