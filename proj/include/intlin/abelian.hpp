#pragma once

#include "intlin/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace intlin {

/// Finite abelian group in invariant-factor form: factors >= 2, each dividing
/// the next.  The empty chain is the trivial group.  Generators, when present,
/// are representative vectors attached by whoever built the group; they do not
/// take part in equality.
struct FiniteAbelianGroup {
    IntVec invariant_factors;
    std::vector<RatVec> generators;

    bool trivial() const { return invariant_factors.empty(); }

    Int order() const {
        Int n = 1;
        for (const Int& f : invariant_factors) n *= f;
        return n;
    }

    bool operator==(const FiniteAbelianGroup& o) const {
        return invariant_factors == o.invariant_factors;
    }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

    /// "1" for the trivial group, otherwise "Z2 x Z4 x ...".
    std::string to_string() const {
        if (trivial()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i)
            os << (i ? " x " : "") << "Z" << invariant_factors[i];
        return os.str();
    }

    static FiniteAbelianGroup trivial_group() { return {}; }

    /// Elementary abelian 2-group of the given rank.
    static FiniteAbelianGroup z2_power(std::size_t n) {
        FiniteAbelianGroup g;
        g.invariant_factors.assign(n, Int(2));
        return g;
    }

    friend std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g) {
        return os << g.to_string();
    }
};

}  // namespace intlin
