#pragma once

#include "intlin/abelian.hpp"
#include "intlin/f2.hpp"
#include "intlin/int_matrix.hpp"
#include "realform/satake.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace charcomp {

/// Intermediate lattice between the root lattice and the weight lattice,
/// described by how it is generated.  Extra generators are weight coordinates
/// and are added on top of the root lattice.
struct LatticeSpec {
    enum class Kind { full, root, generated };
    Kind kind = Kind::full;
    std::vector<intlin::IntVec> generators;

    static LatticeSpec full() { return {Kind::full, {}}; }
    static LatticeSpec root() { return {Kind::root, {}}; }
    static LatticeSpec generated(std::vector<intlin::IntVec> gens) {
        return {Kind::generated, std::move(gens)};
    }
    const char* kind_name() const {
        switch (kind) {
            case Kind::full: return "full";
            case Kind::root: return "root";
            default: return "generated";
        }
    }
};

/// Realized lattice: canonical Hermite basis in weight coordinates.
struct Lattice {
    intlin::IntMatrix basis;
    bool member(std::span<const intlin::Int> v) const;
    bool member(const rootsys::CoordVec& v) const;
    /// set containment via basis membership
    bool contains(const Lattice& other) const;
};

/// Build the lattice and check the sandwich and sigma-stability conditions.
Lattice realize(const LatticeSpec& spec, const realform::SigmaAction& sa);

/// Subspace of sign vectors in Z_2^c, coordinates indexed by the sigma-fixed
/// fundamental weights in ascending node order.
struct F2Subspace {
    std::size_t ambient = 0;
    std::vector<std::uint64_t> basis;  // reduced echelon masks
    std::size_t dim() const { return basis.size(); }
    bool contains(std::uint64_t v) const { return intlin::f2_span_contains(basis, v); }
};

/// Sign vectors compatible with the k' parity conditions.
F2Subspace group_A(const realform::SigmaAction& sa);

/// Sign vectors killed by restriction to the lattice: A meets the parity
/// annihilator of L intersected with the span of the fixed weights.
F2Subspace group_A_L(const realform::SigmaAction& sa, const Lattice& l);

struct ComponentGroupResult {
    intlin::FiniteAbelianGroup group;
    /// one entry per generator: the fixed nodes whose character sign flips
    std::vector<std::vector<int>> sign_flip_nodes;
};

/// pi0 of the Cartan subgroup for the lattice: the quotient A / A_L.
ComponentGroupResult pi0_cartan(const realform::SigmaAction& sa, const Lattice& l);

struct CharacterTorsionResult {
    intlin::FiniteAbelianGroup group;
    /// rational phase vectors generating the component classes
    std::vector<intlin::RatVec> phase_generators;
};

/// pi0 of { equivariant characters of the weight lattice vanishing on the
/// rows of `vanish` }: the phase part is a closed subgroup of a torus and its
/// components are the torsion of Z^l modulo the rows of [sigma^T + I; vanish].
CharacterTorsionResult character_component_group(const intlin::IntMatrix& sigma,
                                                 const std::vector<intlin::IntVec>& vanish);

intlin::FiniteAbelianGroup pi0_fixed_character_subgroup(const intlin::IntMatrix& sigma,
                                                        const std::vector<intlin::IntVec>& vanish);

/// Independent oracle: enumerate sign vectors and lattice-membership
/// constraints directly.  Rejects c > 16.
intlin::FiniteAbelianGroup brute_force_pi0(const realform::SigmaAction& sa, const Lattice& l);

/// Every sigma-stable lattice between the root and weight lattices,
/// enumerated through the subgroups of their quotient.
std::vector<Lattice> all_intermediate_lattices(const realform::SigmaAction& sa);

/// Hermite basis of the root lattice in weight coordinates.
intlin::IntMatrix root_lattice_basis(const rootsys::RootSystem& r);

}  // namespace charcomp
