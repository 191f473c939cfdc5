#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

struct SweepStats {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    bool ok() const { return failures == 0; }
};

/// Every catalog entry passes all Satake checks.
SweepStats sweep_catalog_health();

/// pi0_cartan against the sign-enumeration oracle, over every catalog form of
/// rank <= max_rank and every sigma-stable intermediate lattice.
SweepStats sweep_oracle_equivalence(int max_rank);

/// The sign-parity group A against the character-torsion route with no
/// vanishing conditions, over every catalog form of rank <= max_rank.
SweepStats sweep_two_path_agreement(int max_rank);

/// Over every totally real parabolic of every catalog form of rank <=
/// max_rank: the character route, the real-crossed-node count and the
/// Cartan-mod-Levi route agree, and the boundary map surjects.
SweepStats sweep_totally_real_agreement(int max_rank);

/// Randomized theorem-backed checks.
SweepStats sweep_projection_checks(int max_rank, int samples, std::uint64_t seed);
SweepStats sweep_extend_simple_system(int max_rank, int samples, std::uint64_t seed);

struct SelftestCheck {
    std::string name;
    SweepStats stats;
    double seconds = 0;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_pass() const;
    std::string to_text() const;
};

enum class Depth { small, full };

SelftestReport run_selftest(Depth depth, bool inject_failure = false);

}  // namespace cli
