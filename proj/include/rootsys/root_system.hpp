#pragma once

#include "intlin/int_matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rootsys {

using intlin::Rat;
using intlin::RatVec;

using Coord = long long;
using CoordVec = std::vector<Coord>;

/// One root, stored both over the simple roots and in the fundamental-weight
/// basis (its pairing vector against the simple coroots).
struct Root {
    CoordVec simple;   // coefficients over the simple roots
    CoordVec weight;   // ((alpha|alpha_1^v), ..., (alpha|alpha_l^v))
    bool positive = false;
    Coord height = 0;  // sum of simple coefficients
    Coord norm_d = 0;  // ||alpha||^2 / 2 in symmetrizer units
};

/// Finite crystallographic root system of type A-G.  Cartan convention:
/// cartan()[i][j] = (alpha_j | alpha_i^v), so column j holds the weight
/// coordinates of alpha_j.  Immutable after build().
class RootSystem {
public:
    static RootSystem build(char series, int rank);
    static bool valid_type(char series, int rank);

    char series() const { return series_; }
    int rank() const { return rank_; }
    std::string type_name() const { return std::string(1, series_) + std::to_string(rank_); }

    const std::vector<std::vector<Coord>>& cartan() const { return cartan_; }
    const CoordVec& symmetrizer() const { return sym_; }

    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(int idx) const { return roots_[idx]; }
    std::size_t positive_count() const { return positive_count_; }

    /// Index of the root with the given simple coordinates, -1 if absent.
    int index_of(const CoordVec& simple_coords) const;
    int index_by_weight(const CoordVec& weight_coords) const;
    int simple_root(int i) const { return simple_index_[i]; }
    int negate(int idx) const {
        std::size_t n = positive_count_;
        return idx < static_cast<int>(n) ? idx + static_cast<int>(n) : idx - static_cast<int>(n);
    }
    /// s_i acting on a root, as an index.
    int reflect_root(int idx, int i) const;

    /// (lambda | alpha^v) for lambda given in weight coordinates.
    Rat pairing(const RatVec& weight_coords, int root_idx) const;
    Coord pairing(const CoordVec& weight_coords, int root_idx) const;

    /// s_i on weight coordinates.
    CoordVec reflect_weight(const CoordVec& w, int i) const;
    RatVec reflect_weight(const RatVec& w, int i) const;

    /// Apply a reflection word left to right.
    CoordVec apply_word(const std::vector<int>& word, CoordVec w) const;
    RatVec apply_word(const std::vector<int>& word, RatVec w) const;

    /// Matrix of the word's composite on weight coordinates (left fold).
    intlin::IntMatrix word_matrix(const std::vector<int>& word) const;

    struct DominantResult {
        RatVec vec;
        std::vector<int> word;  // vec == apply_word(word, input)
    };
    /// Reflect strictly negative coordinates away until dominant.
    DominantResult make_dominant(RatVec v) const;

    /// Weight-coordinate vector of the functional with the given values on the
    /// simple roots: (result | alpha_i^v) * d_i = values[i].
    RatVec functional_to_weight(const RatVec& values_on_simple_roots) const;

private:
    char series_ = 0;
    int rank_ = 0;
    std::vector<std::vector<Coord>> cartan_;
    CoordVec sym_;
    std::vector<Root> roots_;
    std::size_t positive_count_ = 0;
    std::vector<int> simple_index_;
    std::map<CoordVec, int> by_simple_;
    std::map<CoordVec, int> by_weight_;
};

/// Word and simple system of a Weyl chamber, in base-chamber coordinates.
/// Applying the word's reflections (left to right) to the base simple roots
/// yields simple_roots.
struct Chamber {
    std::vector<int> word;
    std::vector<CoordVec> simple_roots;  // root coords, base coordinates
};

/// The members of P not expressible as a sum of two members of P.
/// P must be the positive half of a closed subsystem (given as root indices).
std::vector<int> indecomposable_basis(const RootSystem& r, const std::vector<int>& p);

/// Chamber whose simple system contains sub_basis, built from the functional
/// a + eps*b with eps an exact rational small enough that roots off
/// ker(a) keep their a-sign.  Functionals are given by their values on the
/// simple roots.  sub_basis must be the simple system, relative to b, of the
/// subsystem of roots annihilated by a.
Chamber extend_to_simple_system(const RootSystem& r, const std::vector<int>& sub_basis,
                                const RatVec& a_values, const RatVec& b_values);

/// Chamber containing the regular weight-coordinate vector v.
Chamber chamber_of(const RootSystem& r, const RatVec& v);

/// Every root decomposes over cand with integer coefficients, all >= 0 or all <= 0.
bool is_simple_system(const RootSystem& r, const std::vector<CoordVec>& cand);

}  // namespace rootsys
