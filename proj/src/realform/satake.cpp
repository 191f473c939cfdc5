#include "realform/satake.hpp"

#include "intlin/normal_forms.hpp"
#include "support/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace realform {

using intlin::Rat;
using intlin::RatVec;
using rootsys::CoordVec;
using rootsys::RootSystem;
using support::validation_error;

const char* to_string(RootClass c) {
    switch (c) {
        case RootClass::real: return "real";
        case RootClass::imaginary: return "imaginary";
        default: return "complex";
    }
}

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    for (const CheckItem& c : items) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::shared_ptr<const RootSystem> shared_system(char series, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(series, rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(series, rank));
    cache.emplace(key, sys);
    return sys;
}

namespace {

struct DeriveOutcome {
    SigmaAction action;
    CheckReport report;
    bool ok = false;
};

DeriveOutcome derive_impl(const SatakeDatum& d, std::shared_ptr<const RootSystem> rp) {
    DeriveOutcome out;
    CheckReport& rep = out.report;
    auto fail = [&](const std::string& name, const std::string& detail) {
        rep.items.push_back({name, false, detail});
        out.ok = false;
    };
    auto pass = [&](const std::string& name, const std::string& detail = "") {
        rep.items.push_back({name, true, detail});
    };

    const RootSystem& r = *rp;
    const int l = r.rank();
    const auto& cartan = r.cartan();
    const auto& sym = r.symmetrizer();

    SigmaAction& sa = out.action;
    sa.system = rp;
    sa.satake = d;

    // structural shape of the datum
    {
        std::set<int> bset(d.black.begin(), d.black.end());
        bool range_ok = std::all_of(d.black.begin(), d.black.end(),
                                    [&](int i) { return i >= 0 && i < l; });
        for (auto [i, j] : d.arrows)
            range_ok = range_ok && i >= 0 && i < l && j >= 0 && j < l;
        if (!range_ok || bset.size() != d.black.size()) {
            fail("indices-in-range", "node index out of range or repeated");
            return out;
        }
        pass("indices-in-range");

        sa.jmap.resize(l);
        for (int i = 0; i < l; ++i) sa.jmap[i] = i;
        std::set<int> arrowed;
        bool disjoint = true, involutive = true;
        for (auto [i, j] : d.arrows) {
            if (bset.count(i) || bset.count(j) || i == j) disjoint = false;
            if (!arrowed.insert(i).second || !arrowed.insert(j).second) involutive = false;
            sa.jmap[i] = j;
            sa.jmap[j] = i;
        }
        if (!disjoint) {
            fail("arrows-on-distinct-white-nodes", "an arrow touches a black node or a node twice");
            return out;
        }
        pass("arrows-on-distinct-white-nodes");
        if (!involutive) {
            fail("arrows-involutive", "a node carries two arrows");
            return out;
        }
        pass("arrows-involutive");

        for (int i = 0; i < l; ++i) {
            if (bset.count(i)) sa.black.push_back(i);
            else sa.white.push_back(i);
        }
        bool cartan_ok = true;
        for (int i : sa.white)
            for (int j : sa.white)
                if (cartan[sa.jmap[i]][sa.jmap[j]] != cartan[i][j]) cartan_ok = false;
        if (!cartan_ok) {
            fail("arrows-preserve-cartan",
                 "the arrow involution does not preserve the white Cartan block");
            return out;
        }
        pass("arrows-preserve-cartan");
    }

    const std::size_t a = sa.white.size(), b = sa.black.size();

    // Gram solve for k: (sigma beta_i | tau_p) = -(beta_i | tau_p) forces
    // G k_i = -(b_i + b_{j(i)}) with G the Gram matrix of the black roots.
    std::vector<RatVec> gram(b, RatVec(b));
    for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q)
            gram[p][q] = Rat(sym[sa.black[p]] * cartan[sa.black[p]][sa.black[q]]);

    auto inner_with_black = [&](int node) {
        RatVec v(b);
        for (std::size_t q = 0; q < b; ++q)
            v[q] = Rat(sym[node] * cartan[node][sa.black[q]]);
        return v;
    };

    sa.k.assign(a, std::vector<long long>(b, 0));
    sa.kprime.assign(a, std::vector<long long>(b, 0));
    {
        bool integral = true, nonneg = true;
        std::string where;
        for (std::size_t wi = 0; wi < a; ++wi) {
            if (b == 0) break;
            int node = sa.white[wi];
            RatVec bi = inner_with_black(node);
            RatVec bj = inner_with_black(sa.jmap[node]);
            RatVec rhs(b);
            for (std::size_t q = 0; q < b; ++q) rhs[q] = -(bi[q] + bj[q]);
            auto sol = intlin::rational_solve(gram, rhs);
            if (sol.verdict != intlin::SolveVerdict::unique) {
                fail("k-integral-nonnegative", "black Gram matrix is singular");
                return out;
            }
            for (std::size_t q = 0; q < b; ++q) {
                const Rat& x = sol.solution[q];
                if (denominator(x) != 1) {
                    integral = false;
                    std::ostringstream os;
                    os << "k[" << node + 1 << "][" << sa.black[q] + 1 << "] = " << x;
                    where = os.str();
                } else if (x < 0) {
                    nonneg = false;
                } else {
                    sa.k[wi][q] = static_cast<long long>(numerator(x));
                }
            }
        }
        if (!integral) {
            fail("k-integral-nonnegative", "non-integer entry " + where);
            return out;
        }
        if (!nonneg) {
            fail("k-integral-nonnegative", "negative entry");
            return out;
        }
        pass("k-integral-nonnegative");

        bool symmetric = true;
        for (std::size_t wi = 0; wi < a; ++wi) {
            int other = sa.jmap[sa.white[wi]];
            std::size_t wj = std::lower_bound(sa.white.begin(), sa.white.end(), other) -
                             sa.white.begin();
            if (sa.k[wi] != sa.k[wj]) symmetric = false;
        }
        if (!symmetric) {
            fail("k-arrow-symmetric", "k rows differ across an arrow");
            return out;
        }
        pass("k-arrow-symmetric");
    }

    // k'[j][p] = k[j][p] |tau_p|^2 / |beta_j|^2
    {
        bool integral = true;
        for (std::size_t wi = 0; wi < a && integral; ++wi)
            for (std::size_t q = 0; q < b; ++q) {
                long long num = sa.k[wi][q] * sym[sa.black[q]];
                long long den = sym[sa.white[wi]];
                if (num % den != 0) {
                    integral = false;
                    break;
                }
                sa.kprime[wi][q] = num / den;
            }
        if (!integral) {
            fail("kprime-integral", "k' entry is fractional");
            return out;
        }
        pass("kprime-integral");
    }

    // sigma on weight coordinates: white columns permute, black columns are
    // -theta_p + sum_j k'[j][p] omega_j
    sa.sigma = intlin::IntMatrix(l, l);
    for (std::size_t wi = 0; wi < a; ++wi) sa.sigma(sa.jmap[sa.white[wi]], sa.white[wi]) = 1;
    for (std::size_t q = 0; q < b; ++q) {
        int p = sa.black[q];
        sa.sigma(p, p) = -1;
        for (std::size_t wi = 0; wi < a; ++wi)
            if (sa.kprime[wi][q] != 0) sa.sigma(sa.white[wi], p) += sa.kprime[wi][q];
    }

    if (sa.sigma * sa.sigma == intlin::IntMatrix::identity(l)) {
        pass("sigma-involutive");
    } else {
        fail("sigma-involutive", "sigma squared is not the identity");
        return out;
    }

    {
        bool permutes = true;
        sa.classification.resize(r.roots().size());
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
            CoordVec img = sa.sigma_weight(r.root(static_cast<int>(idx)).weight);
            int target = r.index_by_weight(img);
            if (target < 0) {
                permutes = false;
                break;
            }
            if (target == static_cast<int>(idx)) sa.classification[idx] = RootClass::real;
            else if (target == r.negate(static_cast<int>(idx)))
                sa.classification[idx] = RootClass::imaginary;
            else sa.classification[idx] = RootClass::complex_root;
        }
        if (!permutes) {
            fail("sigma-permutes-roots", "a root maps outside the root set");
            return out;
        }
        pass("sigma-permutes-roots");
    }

    {
        bool positive = true;
        for (std::size_t idx = 0; idx < r.roots().size(); ++idx) {
            if (!r.root(static_cast<int>(idx)).positive) continue;
            if (sa.classification[idx] == RootClass::imaginary) continue;
            int img = sa.sigma_root(static_cast<int>(idx));
            if (!r.root(img).positive) positive = false;
        }
        if (!positive) {
            fail("sigma-positive-on-non-imaginary",
                 "a positive non-imaginary root has a negative image");
            return out;
        }
        pass("sigma-positive-on-non-imaginary");
    }

    for (int i : sa.white)
        if (sa.jmap[i] == i) sa.fixed_omegas.push_back(i);

    out.ok = true;
    return out;
}

}  // namespace

int SigmaAction::sigma_root(int idx) const {
    CoordVec img = sigma_weight(system->root(idx).weight);
    int target = system->index_by_weight(img);
    if (target < 0) throw support::defect_error("sigma_root: image is not a root");
    return target;
}

CoordVec SigmaAction::sigma_weight(const CoordVec& w) const {
    const int l = system->rank();
    CoordVec out(l, 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (sigma(i, j) != 0) out[i] += sigma(i, j).convert_to<long long>() * w[j];
    return out;
}

std::array<std::size_t, 3> SigmaAction::class_counts() const {
    std::array<std::size_t, 3> c{0, 0, 0};
    for (RootClass rc : classification) ++c[static_cast<int>(rc)];
    return c;
}

SigmaAction derive_sigma(const SatakeDatum& d, std::shared_ptr<const RootSystem> rp) {
    DeriveOutcome out = derive_impl(d, std::move(rp));
    if (!out.ok) {
        std::string label = d.name.empty() ? std::string(1, d.series) + std::to_string(d.rank)
                                           : d.name;
        throw validation_error("invalid Satake datum for " + label + "\n" + out.report.summary());
    }
    return std::move(out.action);
}

SigmaAction derive_sigma(const SatakeDatum& d) {
    return derive_sigma(d, shared_system(d.series, d.rank));
}

CheckReport validate_satake(const SatakeDatum& d) {
    if (!RootSystem::valid_type(d.series, d.rank)) {
        CheckReport rep;
        rep.items.push_back({"root-type-valid", false, "unsupported (series, rank)"});
        return rep;
    }
    DeriveOutcome out = derive_impl(d, shared_system(d.series, d.rank));
    out.report.items.insert(out.report.items.begin(), {"root-type-valid", true, ""});
    return out.report;
}

}  // namespace realform
