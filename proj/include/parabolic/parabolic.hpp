#pragma once

#include "charcomp/charcomp.hpp"
#include "intlin/f2.hpp"
#include "realform/satake.hpp"
#include "rootsys/root_system.hpp"

#include <vector>

namespace parabolic {

/// Parabolic cut out by a set of crossed simple nodes, with the derived root
/// sets: Q and its reductive/nilpotent split, sigma(Q), and the subsystem
/// R' = Q^r ∩ sigma(Q)^r whose rank fixes the dimension of the central part.
struct ParabolicDatum {
    realform::SigmaAction sa;
    std::vector<int> phi;  // crossed node ids, 0-based, ascending

    std::vector<int> q_roots;
    std::vector<int> qr;
    std::vector<int> qn;
    std::vector<int> sigma_q;
    std::vector<int> rprime;
    std::vector<int> rprime_basis;  // simple system of rprime, root indices
    bool totally_real = false;
    int m = 0;
    int z0_dim = 0;
    std::vector<int> phistar;  // node ids of the dual weights cutting the parabolic

    const rootsys::RootSystem& rs() const { return sa.rs(); }
};

ParabolicDatum build_parabolic(const realform::SigmaAction& sa, std::vector<int> phi);

/// Chamber compatible with Q whose simple system contains the simple system
/// of R', together with sigma and the crossed nodes rewritten in its
/// coordinates.
struct LeviChamber {
    rootsys::Chamber chamber;
    intlin::IntMatrix sigma;           // sigma on the new weight coordinates
    std::vector<int> basis_positions;  // where the R' basis sits inside B(C')
    std::vector<int> phi_new;          // crossed nodes in the new chamber
    bool identity = false;
};

LeviChamber levi_adapted_chamber(const ParabolicDatum& pd);

/// Z2^e with e the number of real crossed simple roots.  Only valid for
/// totally real parabolics.
intlin::FiniteAbelianGroup pi0_isotropy_totally_real(const ParabolicDatum& pd);

/// Component group of the isotropy subgroup, through the character subgroup
/// with prescribed vanishing on the weights dual to the R' basis.
charcomp::CharacterTorsionResult pi0_isotropy(const ParabolicDatum& pd);

/// Components of H / H_0; the same character computation as pi0_isotropy,
/// kept as its own entry point.
charcomp::CharacterTorsionResult pi0_H_mod_H0(const ParabolicDatum& pd);

/// Node ids of the real crossed simple roots: the sign coordinates of
/// pi0(G+) in the totally real case.
std::vector<int> sign_coordinates(const ParabolicDatum& pd);

/// Boundary map of the isotropy fibration on its generators: one row per
/// real crossed simple root, entries (omega_j | alpha^v) mod 2 over the sign
/// coordinates.  Totally real parabolics only.
intlin::F2Matrix delta_map(const ParabolicDatum& pd);

/// The same sign vector for an arbitrary real root.
std::vector<int> delta_sign_row(const ParabolicDatum& pd, int root_idx);

struct ProjectionCheck {
    bool ok = false;
    intlin::IntMatrix certificate;  // Hermite basis of the projected lattice
};

/// The pairing projection of the weight lattice onto the R' span must be the
/// full weight lattice of R'; false signals a defect.
ProjectionCheck projected_weight_lattice_check(const ParabolicDatum& pd);

/// Node ids whose fundamental weights generate the character group of the
/// parabolic subgroup (the duals vanishing on the uncrossed nodes).
std::vector<int> parabolic_character_generators(const ParabolicDatum& pd);

}  // namespace parabolic
