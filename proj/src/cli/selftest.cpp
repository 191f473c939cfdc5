#include "cli/selftest.hpp"

#include "charcomp/charcomp.hpp"
#include "parabolic/parabolic.hpp"
#include "realform/catalog.hpp"
#include "support/errors.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace cli {

using charcomp::Lattice;
using intlin::FiniteAbelianGroup;
using intlin::Rat;
using intlin::RatVec;
using realform::Catalog;
using realform::SigmaAction;
using rootsys::RootSystem;

SweepStats sweep_catalog_health() {
    SweepStats s;
    for (const auto& e : Catalog::standard().entries()) {
        ++s.cases;
        realform::CheckReport rep = realform::validate_satake(e.datum);
        if (!rep.all_pass()) s.fail(e.datum.name + ":\n" + rep.summary());
    }
    return s;
}

SweepStats sweep_oracle_equivalence(int max_rank) {
    SweepStats s;
    for (const auto& e : Catalog::standard().entries()) {
        if (e.datum.rank > max_rank) continue;
        SigmaAction sa = realform::derive_sigma(e.datum);
        for (const Lattice& lat : charcomp::all_intermediate_lattices(sa)) {
            ++s.cases;
            FiniteAbelianGroup closed = charcomp::pi0_cartan(sa, lat).group;
            FiniteAbelianGroup oracle = charcomp::brute_force_pi0(sa, lat);
            if (closed != oracle) {
                std::ostringstream os;
                os << e.datum.name << ": closed form " << closed << " vs oracle " << oracle;
                s.fail(os.str());
            }
        }
    }
    return s;
}

SweepStats sweep_two_path_agreement(int max_rank) {
    SweepStats s;
    for (const auto& e : Catalog::standard().entries()) {
        if (e.datum.rank > max_rank) continue;
        ++s.cases;
        SigmaAction sa = realform::derive_sigma(e.datum);
        FiniteAbelianGroup sign_path = FiniteAbelianGroup::z2_power(charcomp::group_A(sa).dim());
        FiniteAbelianGroup torsion_path = charcomp::pi0_fixed_character_subgroup(sa.sigma, {});
        if (sign_path != torsion_path) {
            std::ostringstream os;
            os << e.datum.name << ": A = " << sign_path << " vs torsion " << torsion_path;
            s.fail(os.str());
        }
    }
    return s;
}

SweepStats sweep_totally_real_agreement(int max_rank) {
    SweepStats s;
    for (const auto& e : Catalog::standard().entries()) {
        if (e.datum.rank > max_rank) continue;
        SigmaAction sa = realform::derive_sigma(e.datum);
        const int l = sa.rs().rank();
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            std::vector<int> phi;
            for (int i = 0; i < l; ++i)
                if ((mask >> i) & 1) phi.push_back(i);
            parabolic::ParabolicDatum pd = parabolic::build_parabolic(sa, phi);
            if (!pd.totally_real) continue;
            ++s.cases;
            FiniteAbelianGroup count_path = parabolic::pi0_isotropy_totally_real(pd);
            FiniteAbelianGroup char_path = parabolic::pi0_isotropy(pd).group;
            FiniteAbelianGroup hmod_path = parabolic::pi0_H_mod_H0(pd).group;
            std::size_t e_real = parabolic::sign_coordinates(pd).size();
            bool ok = count_path == char_path && char_path == hmod_path &&
                      count_path == FiniteAbelianGroup::z2_power(e_real);
            intlin::F2Matrix dm = parabolic::delta_map(pd);
            ok = ok && dm.rank() == e_real;
            if (!ok) {
                std::ostringstream os;
                os << e.datum.name << " phi { ";
                for (int i : phi) os << i + 1 << " ";
                os << "}: count " << count_path << ", characters " << char_path << ", H/H0 "
                   << hmod_path << ", delta rank " << dm.rank() << " of " << e_real;
                s.fail(os.str());
            }
        }
    }
    return s;
}

SweepStats sweep_projection_checks(int max_rank, int samples, std::uint64_t seed) {
    SweepStats s;
    std::vector<const realform::CatalogEntry*> pool;
    for (const auto& e : Catalog::standard().entries())
        if (e.datum.rank <= max_rank) pool.push_back(&e);
    std::mt19937_64 rng(seed);
    for (int n = 0; n < samples; ++n) {
        const auto* e = pool[rng() % pool.size()];
        SigmaAction sa = realform::derive_sigma(e->datum);
        const int l = sa.rs().rank();
        unsigned mask = static_cast<unsigned>(rng() & ((1u << l) - 1));
        std::vector<int> phi;
        for (int i = 0; i < l; ++i)
            if ((mask >> i) & 1) phi.push_back(i);
        ++s.cases;
        parabolic::ParabolicDatum pd = parabolic::build_parabolic(sa, phi);
        parabolic::ProjectionCheck pc = parabolic::projected_weight_lattice_check(pd);
        if (!pc.ok) {
            std::ostringstream os;
            os << e->datum.name << " phi mask " << mask << ": projected lattice not full";
            s.fail(os.str());
        }
    }
    return s;
}

SweepStats sweep_extend_simple_system(int max_rank, int samples, std::uint64_t seed) {
    SweepStats s;
    std::vector<std::pair<char, int>> types;
    for (char c : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int r = 1; r <= max_rank; ++r)
            if (RootSystem::valid_type(c, r)) types.emplace_back(c, r);

    std::mt19937_64 rng(seed);
    auto small_rat = [&](bool allow_zero) {
        for (;;) {
            long long num = static_cast<long long>(rng() % 7) - 3;
            if (!allow_zero && num == 0) continue;
            long long den = 1 + static_cast<long long>(rng() % 2);
            return Rat(num, den);
        }
    };

    for (int n = 0; n < samples; ++n) {
        auto [series, rank] = types[rng() % types.size()];
        auto sys = realform::shared_system(series, rank);
        const RootSystem& r = *sys;
        const int l = r.rank();

        RatVec fa(l);
        for (int i = 0; i < l; ++i) fa[i] = (rng() & 1) ? Rat(0) : small_rat(false);

        auto value = [&](const RatVec& f, int idx) {
            Rat v = 0;
            for (int j = 0; j < l; ++j)
                if (r.root(idx).simple[j] != 0) v += Rat(r.root(idx).simple[j]) * f[j];
            return v;
        };
        std::vector<int> rprime;
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx)
            if (value(fa, static_cast<int>(idx)) == 0) rprime.push_back(static_cast<int>(idx));

        RatVec fb(l);
        bool regular = false;
        for (int attempt = 0; attempt < 200 && !regular; ++attempt) {
            for (int i = 0; i < l; ++i) fb[i] = small_rat(false);
            regular = true;
            for (int idx : rprime)
                if (value(fb, idx) == 0) regular = false;
        }
        if (!regular) continue;  // vanishingly unlikely; try the next sample

        std::vector<int> rp_pos;
        for (int idx : rprime)
            if (value(fb, idx) > 0) rp_pos.push_back(idx);
        std::vector<int> sub_basis = rootsys::indecomposable_basis(r, rp_pos);

        ++s.cases;
        try {
            rootsys::Chamber c = rootsys::extend_to_simple_system(r, sub_basis, fa, fb);
            if (!rootsys::is_simple_system(r, c.simple_roots)) {
                std::ostringstream os;
                os << r.type_name() << " sample " << n << ": output is not a simple system";
                s.fail(os.str());
            }
        } catch (const std::exception& ex) {
            std::ostringstream os;
            os << r.type_name() << " sample " << n << ": " << ex.what();
            s.fail(os.str());
        }
    }
    return s;
}

bool SelftestReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.stats.ok()) return false;
    return true;
}

std::string SelftestReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.stats.ok() ? "[pass] " : "[FAIL] ") << c.name << ": " << c.stats.cases
           << " cases";
        if (!c.stats.ok()) os << ", " << c.stats.failures << " failures";
        os << "  (" << c.seconds << " s)\n";
        if (!c.stats.ok()) os << "    first failure: " << c.stats.first_failure << "\n";
    }
    os << (all_pass() ? "selftest: PASS" : "selftest: FAIL") << "\n";
    return os.str();
}

SelftestReport run_selftest(Depth depth, bool inject_failure) {
    const bool full = depth == Depth::full;
    SelftestReport rep;
    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        SweepStats stats = fn();
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.checks.push_back({name, stats, sec});
    };
    timed("catalog-health", [] { return sweep_catalog_health(); });
    timed("oracle-equivalence", [&] { return sweep_oracle_equivalence(full ? 6 : 4); });
    timed("two-path-agreement", [&] { return sweep_two_path_agreement(8); });
    timed("totally-real-agreement", [&] { return sweep_totally_real_agreement(full ? 4 : 3); });
    timed("projection-checks",
          [&] { return sweep_projection_checks(full ? 5 : 4, full ? 200 : 60, 20240601); });
    timed("simple-system-extension",
          [&] { return sweep_extend_simple_system(full ? 5 : 4, full ? 200 : 60, 20240602); });
    if (inject_failure) {
        SweepStats s;
        s.cases = 1;
        s.fail("failure injected for harness verification");
        rep.checks.push_back({"injected-failure", s, 0.0});
    }
    return rep;
}

}  // namespace cli
