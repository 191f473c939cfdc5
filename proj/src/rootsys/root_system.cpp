#include "rootsys/root_system.hpp"

#include "intlin/normal_forms.hpp"
#include "support/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace rootsys {

using support::defect_error;
using support::validation_error;

bool RootSystem::valid_type(char series, int rank) {
    switch (series) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;  // C2 admitted alongside B2
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

namespace {

std::vector<std::vector<Coord>> cartan_matrix(char series, int l) {
    std::vector<std::vector<Coord>> c(l, std::vector<Coord>(l, 0));
    for (int i = 0; i < l; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j, Coord cij = -1, Coord cji = -1) {
        c[i][j] = cij;  // (alpha_j | alpha_i^v)
        c[j][i] = cji;
    };
    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
            break;
        case 'B':  // last node short
            for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
            edge(l - 2, l - 1, -1, -2);
            break;
        case 'C':  // last node long
            for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
            edge(l - 2, l - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 3 < l; ++i) edge(i, i + 1);
            edge(l - 3, l - 2);
            edge(l - 3, l - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-...-l with 2 hanging off 4
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < l; ++i) edge(i, i + 1);
            break;
        case 'F':  // nodes 1,2 long; 3,4 short
            edge(0, 1);
            edge(1, 2, -1, -2);
            edge(2, 3);
            break;
        case 'G':  // node 1 short, node 2 long
            edge(0, 1, -3, -1);
            break;
    }
    return c;
}

CoordVec minimal_symmetrizer(const std::vector<std::vector<Coord>>& c) {
    const int l = static_cast<int>(c.size());
    std::vector<Rat> d(l, 0);
    std::vector<bool> seen(l, false);
    for (int start = 0; start < l; ++start) {
        if (seen[start]) continue;
        d[start] = 1;
        seen[start] = true;
        std::deque<int> work{start};
        std::vector<int> component{start};
        while (!work.empty()) {
            int i = work.front();
            work.pop_front();
            for (int j = 0; j < l; ++j) {
                if (i == j || c[i][j] == 0 || seen[j]) continue;
                // d_i c[i][j] = d_j c[j][i]
                d[j] = d[i] * Rat(c[i][j]) / Rat(c[j][i]);
                seen[j] = true;
                component.push_back(j);
                work.push_back(j);
            }
        }
        intlin::Int den_lcm = 1, num_gcd = 0;
        for (int i : component) {
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(d[i]));
        }
        for (int i : component) d[i] *= Rat(den_lcm);
        for (int i : component) num_gcd = boost::multiprecision::gcd(num_gcd, numerator(d[i]));
        for (int i : component) d[i] /= Rat(num_gcd);
    }
    CoordVec out(l);
    for (int i = 0; i < l; ++i) out[i] = static_cast<Coord>(numerator(d[i]));
    return out;
}

}  // namespace

RootSystem RootSystem::build(char series, int rank) {
    if (!valid_type(series, rank)) {
        std::ostringstream os;
        os << "invalid root system type " << series << rank
           << " (valid: A>=1, B>=2, C>=2, D>=4, E6-E8, F4, G2)";
        throw validation_error(os.str());
    }
    RootSystem r;
    r.series_ = series;
    r.rank_ = rank;
    r.cartan_ = cartan_matrix(series, rank);
    r.sym_ = minimal_symmetrizer(r.cartan_);
    const int l = rank;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (r.sym_[i] * r.cartan_[i][j] != r.sym_[j] * r.cartan_[j][i])
                throw defect_error("symmetrizer does not symmetrize the Cartan matrix");

    // close the simple roots under all simple reflections
    std::set<CoordVec> seen;
    std::deque<CoordVec> work;
    for (int i = 0; i < l; ++i) {
        CoordVec a(l, 0);
        a[i] = 1;
        seen.insert(a);
        work.push_back(a);
    }
    auto weight_of = [&](const CoordVec& a) {
        CoordVec w(l, 0);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) w[i] += r.cartan_[i][j] * a[j];
        return w;
    };
    while (!work.empty()) {
        CoordVec a = work.front();
        work.pop_front();
        CoordVec w = weight_of(a);
        for (int i = 0; i < l; ++i) {
            CoordVec b = a;
            b[i] -= w[i];
            if (seen.insert(b).second) work.push_back(b);
        }
    }

    std::vector<CoordVec> pos;
    for (const CoordVec& a : seen) {
        bool nonneg = std::all_of(a.begin(), a.end(), [](Coord x) { return x >= 0; });
        if (nonneg) pos.push_back(a);
    }
    if (2 * pos.size() != seen.size())
        throw defect_error("root closure produced a sign-asymmetric set");
    std::sort(pos.begin(), pos.end(), [](const CoordVec& x, const CoordVec& y) {
        Coord hx = std::accumulate(x.begin(), x.end(), Coord(0));
        Coord hy = std::accumulate(y.begin(), y.end(), Coord(0));
        return hx != hy ? hx < hy : x < y;
    });

    r.positive_count_ = pos.size();
    r.roots_.reserve(2 * pos.size());
    auto push_root = [&](const CoordVec& a, bool positive) {
        Root root;
        root.simple = a;
        root.weight = weight_of(a);
        root.positive = positive;
        root.height = std::accumulate(a.begin(), a.end(), Coord(0));
        Coord norm2 = 0;  // a^T (d C) a = ||alpha||^2
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) norm2 += a[i] * r.sym_[i] * r.cartan_[i][j] * a[j];
        root.norm_d = norm2 / 2;
        int idx = static_cast<int>(r.roots_.size());
        r.by_simple_[root.simple] = idx;
        r.by_weight_[root.weight] = idx;
        r.roots_.push_back(std::move(root));
    };
    for (const CoordVec& a : pos) push_root(a, true);
    for (const CoordVec& a : pos) {
        CoordVec neg(a.size());
        std::transform(a.begin(), a.end(), neg.begin(), [](Coord x) { return -x; });
        push_root(neg, false);
    }

    r.simple_index_.resize(l);
    for (int i = 0; i < l; ++i) {
        CoordVec a(l, 0);
        a[i] = 1;
        r.simple_index_[i] = r.index_of(a);
    }
    return r;
}

int RootSystem::index_of(const CoordVec& simple_coords) const {
    auto it = by_simple_.find(simple_coords);
    return it == by_simple_.end() ? -1 : it->second;
}

int RootSystem::index_by_weight(const CoordVec& weight_coords) const {
    auto it = by_weight_.find(weight_coords);
    return it == by_weight_.end() ? -1 : it->second;
}

int RootSystem::reflect_root(int idx, int i) const {
    const Root& a = roots_[idx];
    CoordVec b = a.simple;
    b[i] -= a.weight[i];
    int out = index_of(b);
    if (out < 0) throw defect_error("reflection left the root set");
    return out;
}

Rat RootSystem::pairing(const RatVec& wc, int root_idx) const {
    if (static_cast<int>(wc.size()) != rank_)
        throw validation_error("pairing: weight vector has wrong length");
    const Root& a = roots_[root_idx];
    Rat s = 0;
    for (int j = 0; j < rank_; ++j)
        if (a.simple[j] != 0) s += Rat(a.simple[j]) * wc[j] * Rat(sym_[j]);
    return s / Rat(a.norm_d);
}

Coord RootSystem::pairing(const CoordVec& wc, int root_idx) const {
    if (static_cast<int>(wc.size()) != rank_)
        throw validation_error("pairing: weight vector has wrong length");
    const Root& a = roots_[root_idx];
    Coord s = 0;
    for (int j = 0; j < rank_; ++j) s += a.simple[j] * wc[j] * sym_[j];
    if (s % a.norm_d != 0) throw defect_error("integer pairing came out fractional");
    return s / a.norm_d;
}

CoordVec RootSystem::reflect_weight(const CoordVec& w, int i) const {
    CoordVec out = w;
    Coord wi = w[i];
    for (int k = 0; k < rank_; ++k) out[k] -= cartan_[k][i] * wi;
    return out;
}

RatVec RootSystem::reflect_weight(const RatVec& w, int i) const {
    RatVec out = w;
    Rat wi = w[i];
    for (int k = 0; k < rank_; ++k) out[k] -= Rat(cartan_[k][i]) * wi;
    return out;
}

CoordVec RootSystem::apply_word(const std::vector<int>& word, CoordVec w) const {
    for (int i : word) w = reflect_weight(w, i);
    return w;
}

RatVec RootSystem::apply_word(const std::vector<int>& word, RatVec w) const {
    for (int i : word) w = reflect_weight(w, i);
    return w;
}

intlin::IntMatrix RootSystem::word_matrix(const std::vector<int>& word) const {
    intlin::IntMatrix m = intlin::IntMatrix::identity(rank_);
    // columns are the images of the basis vectors under the composite
    for (int j = 0; j < rank_; ++j) {
        CoordVec e(rank_, 0);
        e[j] = 1;
        CoordVec im = apply_word(word, e);
        for (int i = 0; i < rank_; ++i) m(i, j) = im[i];
    }
    return m;
}

RootSystem::DominantResult RootSystem::make_dominant(RatVec v) const {
    if (static_cast<int>(v.size()) != rank_)
        throw validation_error("make_dominant: vector has wrong length");
    std::vector<int> word;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (v[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        v = reflect_weight(v, neg);
        word.push_back(neg);
    }
    return {std::move(v), std::move(word)};
}

RatVec RootSystem::functional_to_weight(const RatVec& values) const {
    if (static_cast<int>(values.size()) != rank_)
        throw validation_error("functional_to_weight: wrong length");
    RatVec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = values[i] / Rat(sym_[i]);
    return out;
}

std::vector<int> indecomposable_basis(const RootSystem& r, const std::vector<int>& p) {
    std::set<int> pset(p.begin(), p.end());
    for (int idx : p) {
        if (pset.count(r.negate(idx)))
            throw validation_error("indecomposable_basis: set meets its own negation");
    }
    for (int a : p)
        for (int b : p) {
            CoordVec sum = r.root(a).simple;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += r.root(b).simple[k];
            int s = r.index_of(sum);
            if (s >= 0 && !pset.count(s))
                throw validation_error("indecomposable_basis: set not closed under addition");
        }
    std::vector<int> out;
    for (int a : p) {
        bool decomposable = false;
        for (int b : p) {
            CoordVec diff = r.root(a).simple;
            for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= r.root(b).simple[k];
            int dIdx = r.index_of(diff);
            if (dIdx >= 0 && pset.count(dIdx)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chamber chamber_of(const RootSystem& r, const RatVec& v) {
    for (std::size_t i = 0; i < r.roots().size(); ++i) {
        if (!r.root(i).positive) continue;
        if (r.pairing(v, static_cast<int>(i)) == 0)
            throw validation_error("chamber_of: functional not regular");
    }
    auto dom = r.make_dominant(v);
    Chamber c;
    c.word.assign(dom.word.rbegin(), dom.word.rend());
    for (int j = 0; j < r.rank(); ++j) {
        CoordVec w = r.root(r.simple_root(j)).weight;
        w = r.apply_word(c.word, w);
        int idx = r.index_by_weight(w);
        if (idx < 0) throw defect_error("chamber_of: image of a simple root is not a root");
        c.simple_roots.push_back(r.root(idx).simple);
    }
    return c;
}

Chamber extend_to_simple_system(const RootSystem& r, const std::vector<int>& sub_basis,
                                const RatVec& a_values, const RatVec& b_values) {
    const int l = r.rank();
    if (static_cast<int>(a_values.size()) != l || static_cast<int>(b_values.size()) != l)
        throw validation_error("extend_to_simple_system: functional has wrong length");

    auto value = [&](const RatVec& f, int idx) {
        Rat s = 0;
        const CoordVec& a = r.root(idx).simple;
        for (int j = 0; j < l; ++j)
            if (a[j] != 0) s += Rat(a[j]) * f[j];
        return s;
    };

    // roots annihilated by a
    std::vector<int> rprime;
    for (std::size_t i = 0; i < r.roots().size(); ++i)
        if (value(a_values, static_cast<int>(i)) == 0) rprime.push_back(static_cast<int>(i));

    for (int idx : rprime)
        if (value(b_values, idx) == 0)
            throw validation_error("extend_to_simple_system: b is not regular on the subsystem");

    std::vector<int> rprime_pos;
    for (int idx : rprime)
        if (value(b_values, idx) > 0) rprime_pos.push_back(idx);
    std::vector<int> expected = indecomposable_basis(r, rprime_pos);
    std::vector<int> given = sub_basis;
    std::sort(given.begin(), given.end());
    if (given != expected)
        throw validation_error(
            "extend_to_simple_system: sub_basis is not the simple system of ker(a) relative to b");

    if (rprime.size() == r.roots().size()) {
        // a vanishes on the whole system; the chamber of b answers
        return chamber_of(r, r.functional_to_weight(b_values));
    }

    // eps small enough that eps |alpha(b)| < |alpha(a)| wherever alpha(a) != 0
    Rat eps(1);
    bool constrained = false;
    for (std::size_t i = 0; i < r.roots().size(); ++i) {
        Rat va = value(a_values, static_cast<int>(i));
        if (va == 0) continue;
        Rat vb = value(b_values, static_cast<int>(i));
        if (vb == 0) continue;
        Rat bound = abs(va) / abs(vb);
        if (!constrained || bound < eps) {
            eps = bound;
            constrained = true;
        }
    }
    eps /= 2;

    RatVec f(l);
    for (int i = 0; i < l; ++i) f[i] = a_values[i] + eps * b_values[i];
    Chamber c = chamber_of(r, r.functional_to_weight(f));

    std::set<CoordVec> simple_set(c.simple_roots.begin(), c.simple_roots.end());
    for (int idx : sub_basis)
        if (!simple_set.count(r.root(idx).simple))
            throw defect_error("extend_to_simple_system: sub_basis not contained in the result");
    return c;
}

bool is_simple_system(const RootSystem& r, const std::vector<CoordVec>& cand) {
    const int l = r.rank();
    if (static_cast<int>(cand.size()) != l) return false;
    std::vector<RatVec> m(l, RatVec(l));
    for (int j = 0; j < l; ++j) {
        if (r.index_of(cand[j]) < 0) return false;
        for (int i = 0; i < l; ++i) m[i][j] = Rat(cand[j][i]);
    }
    for (const Root& root : r.roots()) {
        RatVec b(l);
        for (int i = 0; i < l; ++i) b[i] = Rat(root.simple[i]);
        auto res = intlin::rational_solve(m, b);
        if (res.verdict != intlin::SolveVerdict::unique) return false;
        int sign = 0;
        for (const Rat& x : res.solution) {
            if (denominator(x) != 1) return false;
            if (x == 0) continue;
            int s = x > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (sign != s) return false;
        }
    }
    return true;
}

}  // namespace rootsys
