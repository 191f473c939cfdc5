#pragma once

#include "intlin/int_matrix.hpp"
#include "rootsys/root_system.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace realform {

/// Combinatorial datum for a conjugation in an adapted chamber: the black
/// simple roots (imaginary ones) and an involutive arrow pairing on the
/// white nodes.  Indices are 0-based here; file formats are 1-based.
struct SatakeDatum {
    char series = 0;
    int rank = 0;
    std::vector<int> black;
    std::vector<std::pair<int, int>> arrows;
    std::string name;
};

enum class RootClass { real, imaginary, complex_root };

const char* to_string(RootClass c);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
    std::string summary() const;
};

/// The conjugation derived from a Satake datum: the integer matrix of sigma
/// on weight coordinates, the k and k' matrices, and the per-root
/// classification.  Immutable once built.
struct SigmaAction {
    std::shared_ptr<const rootsys::RootSystem> system;
    SatakeDatum satake;
    std::vector<int> white;  // ascending node ids
    std::vector<int> black;  // ascending node ids
    std::vector<int> jmap;   // involution on nodes; identity on black ones
    intlin::IntMatrix sigma;
    std::vector<std::vector<long long>> k;       // [white position][black position]
    std::vector<std::vector<long long>> kprime;  // same shape, k * |tau|^2 / |beta|^2
    std::vector<int> fixed_omegas;               // white nodes with jmap(i) == i
    std::vector<RootClass> classification;       // per root index

    const rootsys::RootSystem& rs() const { return *system; }

    /// Index of sigma(root).
    int sigma_root(int idx) const;
    RootClass classify(int idx) const { return classification[idx]; }

    rootsys::CoordVec sigma_weight(const rootsys::CoordVec& w) const;

    /// Number of real / imaginary / complex roots.
    std::array<std::size_t, 3> class_counts() const;
};

/// Derive sigma from the datum and verify every structural invariant.
/// Throws support::validation_error with the failing certificate otherwise.
SigmaAction derive_sigma(const SatakeDatum& d, std::shared_ptr<const rootsys::RootSystem> r);
SigmaAction derive_sigma(const SatakeDatum& d);

/// Run all checks without throwing; the report carries pass/fail per check.
CheckReport validate_satake(const SatakeDatum& d);

/// Shared, cached root systems keyed by type.
std::shared_ptr<const rootsys::RootSystem> shared_system(char series, int rank);

}  // namespace realform
