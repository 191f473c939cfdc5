#include "parabolic/parabolic.hpp"

#include "intlin/normal_forms.hpp"
#include "support/errors.hpp"

#include <algorithm>
#include <set>

namespace parabolic {

using intlin::FiniteAbelianGroup;
using intlin::Int;
using intlin::IntMatrix;
using intlin::IntVec;
using intlin::Rat;
using intlin::RatVec;
using realform::RootClass;
using realform::SigmaAction;
using rootsys::CoordVec;
using rootsys::RootSystem;
using support::defect_error;
using support::validation_error;

namespace {

long long phi_support(const rootsys::Root& root, const std::vector<int>& phi) {
    long long s = 0;
    for (int i : phi) s += root.simple[i];
    return s;
}

}  // namespace

ParabolicDatum build_parabolic(const SigmaAction& sa, std::vector<int> phi) {
    const RootSystem& r = sa.rs();
    std::sort(phi.begin(), phi.end());
    phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
    for (int i : phi)
        if (i < 0 || i >= r.rank())
            throw validation_error("build_parabolic: crossed node out of range");

    ParabolicDatum pd;
    pd.sa = sa;
    pd.phi = phi;
    pd.phistar = phi;

    std::set<int> qset, qrset;
    for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
        long long s = phi_support(r.root(static_cast<int>(idx)), phi);
        if (s >= 0) {
            pd.q_roots.push_back(static_cast<int>(idx));
            qset.insert(static_cast<int>(idx));
            if (s == 0) {
                pd.qr.push_back(static_cast<int>(idx));
                qrset.insert(static_cast<int>(idx));
            } else {
                pd.qn.push_back(static_cast<int>(idx));
            }
        }
    }
    std::set<int> sigma_qset;
    for (int idx : pd.q_roots) sigma_qset.insert(sa.sigma_root(idx));
    pd.sigma_q.assign(sigma_qset.begin(), sigma_qset.end());
    pd.totally_real = sigma_qset == qset;

    for (int idx : pd.qr)
        if (qrset.count(sa.sigma_root(idx))) pd.rprime.push_back(idx);

    std::vector<int> rprime_pos;
    for (int idx : pd.rprime)
        if (r.root(idx).positive) rprime_pos.push_back(idx);
    pd.rprime_basis = rootsys::indecomposable_basis(r, rprime_pos);
    pd.m = static_cast<int>(pd.rprime_basis.size());
    pd.z0_dim = r.rank() - pd.m;
    return pd;
}

LeviChamber levi_adapted_chamber(const ParabolicDatum& pd) {
    const RootSystem& r = pd.rs();
    const SigmaAction& sa = pd.sa;
    const int l = r.rank();

    LeviChamber out;

    bool all_simple = std::all_of(pd.rprime_basis.begin(), pd.rprime_basis.end(), [&](int idx) {
        return r.root(idx).height == 1;
    });
    if (all_simple) {
        out.identity = true;
        out.chamber.word = {};
        for (int j = 0; j < l; ++j)
            out.chamber.simple_roots.push_back(r.root(r.simple_root(j)).simple);
        out.sigma = sa.sigma;
        for (int idx : pd.rprime_basis) {
            const CoordVec& a = r.root(idx).simple;
            int pos = static_cast<int>(std::find(a.begin(), a.end(), 1) - a.begin());
            out.basis_positions.push_back(pos);
        }
        std::sort(out.basis_positions.begin(), out.basis_positions.end());
        out.phi_new = pd.phi;
        return out;
    }

    // the defining functional of Q plus a small multiple of its sigma-image
    // vanishes exactly on R'
    RatVec fa(l), fabar(l), fb(l, Rat(1));
    for (int i = 0; i < l; ++i) {
        fa[i] = std::binary_search(pd.phi.begin(), pd.phi.end(), i) ? 1 : 0;
        fabar[i] = Rat(phi_support(r.root(sa.sigma_root(r.simple_root(i))), pd.phi));
    }
    Rat eps(1);
    bool constrained = false;
    for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
        long long s = phi_support(r.root(static_cast<int>(idx)), pd.phi);
        if (s == 0) continue;
        long long sbar = phi_support(r.root(sa.sigma_root(static_cast<int>(idx))), pd.phi);
        if (sbar == 0) continue;
        Rat bound(std::abs(s), std::abs(sbar));
        if (!constrained || bound < eps) {
            eps = bound;
            constrained = true;
        }
    }
    eps /= 2;
    RatVec f1(l);
    for (int i = 0; i < l; ++i) f1[i] = fa[i] + eps * fabar[i];

    // sanity: the combined functional must vanish exactly on R'
    {
        std::set<int> ker;
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
            Rat val = 0;
            for (int i = 0; i < l; ++i)
                if (r.root(static_cast<int>(idx)).simple[i] != 0)
                    val += Rat(r.root(static_cast<int>(idx)).simple[i]) * f1[i];
            if (val == 0) ker.insert(static_cast<int>(idx));
        }
        if (ker != std::set<int>(pd.rprime.begin(), pd.rprime.end()))
            throw defect_error("levi_adapted_chamber: functional kernel is not R'");
    }

    out.chamber = rootsys::extend_to_simple_system(r, pd.rprime_basis, f1, fb);
    out.identity = out.chamber.word.empty();

    IntMatrix w = r.word_matrix(out.chamber.word);
    std::vector<int> rev(out.chamber.word.rbegin(), out.chamber.word.rend());
    IntMatrix winv = r.word_matrix(rev);
    out.sigma = winv * sa.sigma * w;

    std::set<int> qn_set(pd.qn.begin(), pd.qn.end());
    std::set<int> q_set(pd.q_roots.begin(), pd.q_roots.end());
    std::set<CoordVec> basis_coords;
    for (int idx : pd.rprime_basis) basis_coords.insert(r.root(idx).simple);
    for (int j = 0; j < l; ++j) {
        int idx = r.index_of(out.chamber.simple_roots[j]);
        if (idx < 0) throw defect_error("levi_adapted_chamber: chamber holds a non-root");
        if (!q_set.count(idx))
            throw defect_error("levi_adapted_chamber: chamber not compatible with the parabolic");
        if (basis_coords.count(r.root(idx).simple)) out.basis_positions.push_back(j);
        if (qn_set.count(idx)) out.phi_new.push_back(j);
    }
    if (out.basis_positions.size() != pd.rprime_basis.size())
        throw defect_error("levi_adapted_chamber: R' basis not contained in the chamber");
    return out;
}

FiniteAbelianGroup pi0_isotropy_totally_real(const ParabolicDatum& pd) {
    if (!pd.totally_real)
        throw validation_error(
            "pi0_isotropy_totally_real: parabolic is not totally real; use pi0_isotropy");
    return FiniteAbelianGroup::z2_power(sign_coordinates(pd).size());
}

charcomp::CharacterTorsionResult pi0_isotropy(const ParabolicDatum& pd) {
    LeviChamber lev = levi_adapted_chamber(pd);
    const int l = pd.rs().rank();
    std::vector<IntVec> vanish;
    for (int pos : lev.basis_positions) {
        IntVec e(l, 0);
        e[pos] = 1;
        vanish.push_back(std::move(e));
    }
    return charcomp::character_component_group(lev.sigma, vanish);
}

charcomp::CharacterTorsionResult pi0_H_mod_H0(const ParabolicDatum& pd) {
    // the generators of the weights orthogonal to the uncrossed span are
    // exactly the duals of the R' basis, so this is the same computation
    return pi0_isotropy(pd);
}

std::vector<int> sign_coordinates(const ParabolicDatum& pd) {
    std::vector<int> out;
    for (int i : pd.phi)
        if (pd.sa.classify(pd.rs().simple_root(i)) == RootClass::real) out.push_back(i);
    return out;
}

intlin::F2Matrix delta_map(const ParabolicDatum& pd) {
    if (!pd.totally_real)
        throw validation_error("delta_map: parabolic is not totally real");
    std::vector<int> coords = sign_coordinates(pd);
    intlin::F2Matrix m(coords.size(), coords.size());
    for (std::size_t r = 0; r < coords.size(); ++r) {
        std::vector<int> row = delta_sign_row(pd, pd.rs().simple_root(coords[r]));
        for (std::size_t j = 0; j < coords.size(); ++j) m.set(r, j, row[j] != 0);
    }
    return m;
}

std::vector<int> delta_sign_row(const ParabolicDatum& pd, int root_idx) {
    const RootSystem& r = pd.rs();
    if (!pd.totally_real)
        throw validation_error("delta_sign_row: parabolic is not totally real");
    if (pd.sa.classify(root_idx) != RootClass::real)
        throw validation_error("delta_sign_row: root is not real");
    std::vector<int> coords = sign_coordinates(pd);
    std::vector<int> out;
    for (int j : coords) {
        CoordVec e(r.rank(), 0);
        e[j] = 1;
        out.push_back(static_cast<int>(r.pairing(e, root_idx) & 1));
    }
    return out;
}

ProjectionCheck projected_weight_lattice_check(const ParabolicDatum& pd) {
    const RootSystem& r = pd.rs();
    const int l = r.rank();
    const int m = pd.m;
    ProjectionCheck out;
    if (m == 0) {
        out.ok = true;
        out.certificate = IntMatrix(0, 0);
        return out;
    }
    // rows: each fundamental weight paired against the R'-basis coroots
    std::vector<IntVec> rows;
    for (int j = 0; j < l; ++j) {
        CoordVec e(l, 0);
        e[j] = 1;
        IntVec row(m);
        for (int i = 0; i < m; ++i) row[i] = r.pairing(e, pd.rprime_basis[i]);
        rows.push_back(std::move(row));
    }
    out.certificate = intlin::hermite_basis(rows, m);
    out.ok = out.certificate == IntMatrix::identity(m);
    return out;
}

std::vector<int> parabolic_character_generators(const ParabolicDatum& pd) { return pd.phistar; }

}  // namespace parabolic
