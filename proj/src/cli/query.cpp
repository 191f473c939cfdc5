#include "cli/query.hpp"

#include "charcomp/charcomp.hpp"
#include "parabolic/parabolic.hpp"
#include "support/errors.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace cli {

using intlin::Int;
using intlin::IntVec;
using intlin::Rat;
using nlohmann::json;
using nlohmann::ordered_json;
using support::defect_error;
using support::validation_error;

namespace {

nlohmann::json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw usage_error(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw usage_error(where + ": unknown field '" + it.key() + "'");
}

struct ParsedQuery {
    char series = 0;
    int rank = 0;
    bool named = false;
    std::string form_name;
    std::vector<int> black;
    std::vector<std::pair<int, int>> arrows;
    charcomp::LatticeSpec lattice = charcomp::LatticeSpec::full();
    bool has_parabolic = false;
    std::vector<int> phi;
    std::set<std::string> requests;
    bool assume_mnc = false;
};

ParsedQuery parse_query(const json& input) {
    check_keys(input, {"root_type", "real_form", "lattice", "parabolic", "requests",
                       "assume_maximally_noncompact"},
               "query");
    ParsedQuery q;
    try {
        if (!input.contains("root_type")) throw usage_error("query: missing root_type");
        const json& rt = input.at("root_type");
        check_keys(rt, {"series", "rank"}, "root_type");
        std::string series = rt.at("series").get<std::string>();
        if (series.size() != 1) throw usage_error("root_type.series must be a single letter");
        q.series = series[0];
        q.rank = rt.at("rank").get<int>();

        if (!input.contains("real_form")) throw usage_error("query: missing real_form");
        const json& rf = input.at("real_form");
        if (rf.contains("name")) {
            check_keys(rf, {"name"}, "real_form");
            q.named = true;
            q.form_name = rf.at("name").get<std::string>();
        } else {
            check_keys(rf, {"black", "arrows"}, "real_form");
            for (int i : rf.value("black", std::vector<int>{})) q.black.push_back(i - 1);
            if (rf.contains("arrows"))
                for (const auto& p : rf.at("arrows")) {
                    if (!p.is_array() || p.size() != 2)
                        throw usage_error("real_form.arrows entries must be pairs");
                    q.arrows.emplace_back(p[0].get<int>() - 1, p[1].get<int>() - 1);
                }
        }

        if (input.contains("lattice")) {
            const json& lat = input.at("lattice");
            if (lat.is_string()) {
                std::string s = lat.get<std::string>();
                if (s == "full") q.lattice = charcomp::LatticeSpec::full();
                else if (s == "root") q.lattice = charcomp::LatticeSpec::root();
                else throw usage_error("lattice must be \"full\", \"root\" or {generators: [...]}");
            } else {
                check_keys(lat, {"generators"}, "lattice");
                std::vector<IntVec> gens;
                for (const auto& g : lat.at("generators")) {
                    IntVec v;
                    for (const auto& x : g) v.push_back(Int(x.get<long long>()));
                    gens.push_back(std::move(v));
                }
                q.lattice = charcomp::LatticeSpec::generated(std::move(gens));
            }
        }

        if (input.contains("parabolic")) {
            const json& par = input.at("parabolic");
            check_keys(par, {"phi"}, "parabolic");
            q.has_parabolic = true;
            for (int i : par.at("phi").get<std::vector<int>>()) q.phi.push_back(i - 1);
        }

        static const std::set<std::string> known{"pi0_cartan", "pi0_isotropy", "delta",
                                                 "validate", "all"};
        if (input.contains("requests")) {
            for (const auto& r : input.at("requests")) {
                std::string name = r.get<std::string>();
                if (!known.count(name)) throw usage_error("unknown request '" + name + "'");
                q.requests.insert(name);
            }
        } else {
            q.requests.insert("all");
        }
        if (q.requests.count("all")) {
            q.requests = {"validate", "pi0_cartan"};
            if (q.has_parabolic) {
                q.requests.insert("pi0_isotropy");
                q.requests.insert("delta");
            }
        }

        q.assume_mnc = input.value("assume_maximally_noncompact", false);
    } catch (const json::exception& e) {
        throw usage_error(std::string("query: ") + e.what());
    }
    return q;
}

ordered_json matrix_json(const intlin::IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json ll_matrix_json(const std::vector<std::vector<long long>>& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

ordered_json group_json(const intlin::FiniteAbelianGroup& g) {
    ordered_json factors = ordered_json::array();
    for (const Int& f : g.invariant_factors) factors.push_back(json_int(f));
    return factors;
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int i : v) out.push_back(i + 1);
    return out;
}

}  // namespace

QueryOutcome run_query(const json& input, const realform::Catalog& catalog) {
    auto t0 = std::chrono::steady_clock::now();
    ParsedQuery q = parse_query(input);

    QueryOutcome out;
    ordered_json& report = out.report;
    report["input"] = input;
    int severity = exit_ok;
    auto worse = [&](int s) { severity = std::max(severity, s); };

    // assemble the Satake datum
    realform::SatakeDatum datum;
    std::string datum_problem;
    if (q.named) {
        const realform::CatalogEntry* entry = catalog.find(q.form_name);
        if (!entry) {
            datum_problem = "unknown real form '" + q.form_name + "'";
            worse(exit_validation);
        } else if (entry->datum.series != q.series || entry->datum.rank != q.rank) {
            datum_problem = "real form '" + q.form_name + "' lives on " +
                            std::string(1, entry->datum.series) + std::to_string(entry->datum.rank) +
                            ", not the requested root type";
            worse(exit_validation);
        } else {
            datum = entry->datum;
        }
    } else {
        datum = realform::SatakeDatum{q.series, q.rank, q.black, q.arrows, ""};
    }

    std::optional<realform::SigmaAction> sa;
    ordered_json derived;
    if (datum_problem.empty()) {
        if (!rootsys::RootSystem::valid_type(q.series, q.rank)) {
            datum_problem = "invalid root type";
            worse(exit_validation);
        } else {
            try {
                sa = realform::derive_sigma(datum);
            } catch (const validation_error& e) {
                datum_problem = e.what();
                worse(exit_validation);
            }
        }
    }

    std::optional<parabolic::ParabolicDatum> pd;
    std::string pd_problem;
    if (sa && q.has_parabolic) {
        try {
            pd = parabolic::build_parabolic(*sa, q.phi);
        } catch (const validation_error& e) {
            pd_problem = e.what();
            worse(exit_validation);
        }
    }

    if (sa) {
        derived["type"] = sa->rs().type_name();
        if (q.named) derived["name"] = q.form_name;
        derived["white_nodes"] = one_based(sa->white);
        derived["black_nodes"] = one_based(sa->black);
        ordered_json arrows = ordered_json::array();
        for (int i : sa->white)
            if (sa->jmap[i] > i) arrows.push_back(std::vector<int>{i + 1, sa->jmap[i] + 1});
        derived["arrows"] = std::move(arrows);
        derived["k"] = ll_matrix_json(sa->k);
        derived["kprime"] = ll_matrix_json(sa->kprime);
        derived["sigma_weight_matrix"] = matrix_json(sa->sigma);
        derived["fixed_weight_nodes"] = one_based(sa->fixed_omegas);
        auto counts = sa->class_counts();
        derived["root_class_counts"] = {
            {"real", counts[0]}, {"imaginary", counts[1]}, {"complex", counts[2]}};
        if (pd) {
            ordered_json pj;
            pj["phi"] = one_based(pd->phi);
            pj["totally_real"] = pd->totally_real;
            pj["rprime_rank"] = pd->m;
            pj["z0_dim"] = pd->z0_dim;
            ordered_json basis = ordered_json::array();
            for (int idx : pd->rprime_basis) basis.push_back(pd->rs().root(idx).simple);
            pj["rprime_basis"] = std::move(basis);
            pj["character_generator_nodes"] =
                one_based(parabolic::parabolic_character_generators(*pd));
            derived["parabolic"] = std::move(pj);
        }
    } else {
        derived["error"] = datum_problem;
    }
    report["derived"] = std::move(derived);

    ordered_json results;
    std::set<std::string> assumptions{"input-chamber-declared-adapted"};

    auto request_error = [&](const std::string& msg, int sev) {
        ordered_json r;
        r["status"] = "error";
        r["message"] = msg;
        worse(sev);
        return r;
    };

    if (q.requests.count("validate")) {
        realform::CheckReport rep = datum_problem.empty() || !q.named
                                        ? realform::validate_satake(datum)
                                        : realform::CheckReport{};
        ordered_json r;
        if (!datum_problem.empty() && rep.items.empty()) {
            r = request_error(datum_problem, exit_validation);
        } else {
            r["status"] = "ok";
            r["all_pass"] = rep.all_pass();
            ordered_json checks = ordered_json::array();
            for (const auto& item : rep.items) {
                ordered_json c;
                c["name"] = item.name;
                c["pass"] = item.pass;
                if (!item.detail.empty()) c["detail"] = item.detail;
                checks.push_back(std::move(c));
            }
            r["checks"] = std::move(checks);
            if (!rep.all_pass()) worse(exit_validation);
        }
        results["validate"] = std::move(r);
    }

    if (q.requests.count("pi0_cartan")) {
        if (!sa) {
            results["pi0_cartan"] = request_error(datum_problem, exit_validation);
        } else {
            try {
                charcomp::Lattice lat = charcomp::realize(q.lattice, *sa);
                charcomp::F2Subspace a = charcomp::group_A(*sa);
                charcomp::F2Subspace al = charcomp::group_A_L(*sa, lat);
                charcomp::ComponentGroupResult res = charcomp::pi0_cartan(*sa, lat);
                ordered_json r;
                r["status"] = "ok";
                r["path"] = "cartan-sign-quotient";
                r["lattice"] = q.lattice.kind_name();
                r["lattice_basis"] = matrix_json(lat.basis);
                r["dim_A"] = a.dim();
                r["dim_A_L"] = al.dim();
                r["invariant_factors"] = group_json(res.group);
                r["group"] = res.group.to_string();
                ordered_json gens = ordered_json::array();
                for (const auto& g : res.sign_flip_nodes) {
                    ordered_json gj;
                    gj["sign_flip_nodes"] = one_based(g);
                    gens.push_back(std::move(gj));
                }
                r["generators"] = std::move(gens);
                results["pi0_cartan"] = std::move(r);
            } catch (const validation_error& e) {
                results["pi0_cartan"] = request_error(e.what(), exit_validation);
            } catch (const defect_error& e) {
                results["pi0_cartan"] = request_error(e.what(), exit_defect);
            }
        }
    }

    bool isotropy_wanted = q.requests.count("pi0_isotropy") || q.requests.count("delta");
    if (isotropy_wanted && !q.has_parabolic) {
        ordered_json err = request_error("request needs a parabolic {phi: [...]}", exit_usage);
        if (q.requests.count("pi0_isotropy")) results["pi0_isotropy"] = err;
        if (q.requests.count("delta")) results["delta"] = err;
    } else if (isotropy_wanted && !q.assume_mnc) {
        ordered_json err = request_error(
            "isotropy computations assume the Cartan subalgebra is maximally noncompact in the "
            "isotropy algebra; acknowledge with assume_maximally_noncompact "
            "(--assume-maximally-noncompact)",
            exit_validation);
        if (q.requests.count("pi0_isotropy")) results["pi0_isotropy"] = err;
        if (q.requests.count("delta")) results["delta"] = err;
    } else if (isotropy_wanted) {
        assumptions.insert("cartan-maximally-noncompact-in-isotropy");
        if (q.requests.count("pi0_isotropy")) {
            if (!pd) {
                results["pi0_isotropy"] = request_error(
                    pd_problem.empty() ? datum_problem : pd_problem, exit_validation);
            } else {
                try {
                    parabolic::LeviChamber lev = parabolic::levi_adapted_chamber(*pd);
                    charcomp::CharacterTorsionResult res = parabolic::pi0_isotropy(*pd);
                    charcomp::CharacterTorsionResult hmod = parabolic::pi0_H_mod_H0(*pd);
                    ordered_json r;
                    r["status"] = "ok";
                    r["path"] = "levi-character-torsion";
                    r["invariant_factors"] = group_json(res.group);
                    r["group"] = res.group.to_string();
                    ordered_json phases = ordered_json::array();
                    for (const auto& phase : res.phase_generators) {
                        ordered_json p = ordered_json::array();
                        for (const Rat& x : phase) p.push_back(rat_str(x));
                        phases.push_back(std::move(p));
                    }
                    r["phase_generators"] = std::move(phases);
                    std::vector<int> word1;
                    for (int w : lev.chamber.word) word1.push_back(w + 1);
                    r["chamber_word"] = word1;
                    if (!lev.identity)
                        assumptions.insert("levi-chamber-not-input-chamber");
                    ordered_json hj;
                    hj["path"] = "cartan-mod-levi-cartan";
                    hj["invariant_factors"] = group_json(hmod.group);
                    hj["agrees"] = hmod.group == res.group;
                    r["pi0_H_mod_H0"] = std::move(hj);
                    if (pd->totally_real) {
                        intlin::FiniteAbelianGroup tr = parabolic::pi0_isotropy_totally_real(*pd);
                        ordered_json tj;
                        tj["path"] = "real-crossed-count";
                        tj["real_crossed_nodes"] = one_based(parabolic::sign_coordinates(*pd));
                        tj["invariant_factors"] = group_json(tr);
                        tj["agrees"] = tr == res.group;
                        r["totally_real_path"] = std::move(tj);
                    }
                    results["pi0_isotropy"] = std::move(r);
                } catch (const validation_error& e) {
                    results["pi0_isotropy"] = request_error(e.what(), exit_validation);
                } catch (const defect_error& e) {
                    results["pi0_isotropy"] = request_error(e.what(), exit_defect);
                }
            }
        }
        if (q.requests.count("delta")) {
            if (!pd) {
                results["delta"] = request_error(
                    pd_problem.empty() ? datum_problem : pd_problem, exit_validation);
            } else if (!pd->totally_real) {
                results["delta"] = request_error(
                    "delta is defined for totally real parabolics only", exit_validation);
            } else {
                std::vector<int> coords = parabolic::sign_coordinates(*pd);
                intlin::F2Matrix dm = parabolic::delta_map(*pd);
                ordered_json r;
                r["status"] = "ok";
                r["path"] = "loop-boundary-signs";
                r["sign_coordinates"] = one_based(coords);
                ordered_json rows = ordered_json::array();
                for (std::size_t i = 0; i < dm.rows(); ++i) {
                    std::vector<int> row;
                    for (std::size_t j = 0; j < dm.cols(); ++j) row.push_back(dm.get(i, j));
                    rows.push_back(row);
                }
                r["rows"] = std::move(rows);
                r["surjective_onto_pi0"] = dm.rank() == coords.size();
                results["delta"] = std::move(r);
            }
        }
    }

    report["results"] = std::move(results);
    report["assumptions"] = assumptions;
    out.exit_code = severity;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    report["timing_ms"] = ms;
    return out;
}

std::string report_to_text(const ordered_json& report) {
    std::ostringstream os;
    const ordered_json& derived = report.at("derived");
    if (derived.contains("error")) {
        os << "derivation failed: " << derived["error"].get<std::string>() << "\n";
    } else {
        os << "form: " << derived["type"].get<std::string>();
        if (derived.contains("name")) os << " (" << derived["name"].get<std::string>() << ")";
        os << "  black " << derived["black_nodes"].dump() << "  arrows "
           << derived["arrows"].dump() << "\n";
        os << "k = " << derived["k"].dump() << "   k' = " << derived["kprime"].dump() << "\n";
        os << "sigma (weight basis) = " << derived["sigma_weight_matrix"].dump() << "\n";
        const auto& cc = derived["root_class_counts"];
        os << "roots: " << cc["real"].get<int>() << " real, " << cc["imaginary"].get<int>()
           << " imaginary, " << cc["complex"].get<int>() << " complex;  fixed weights "
           << derived["fixed_weight_nodes"].dump() << "\n";
        if (derived.contains("parabolic")) {
            const auto& pj = derived["parabolic"];
            os << "parabolic phi " << pj["phi"].dump()
               << (pj["totally_real"].get<bool>() ? " (totally real)" : "")
               << ": rank R' = " << pj["rprime_rank"].get<int>()
               << ", dim z0 = " << pj["z0_dim"].get<int>() << ", character generators at nodes "
               << pj["character_generator_nodes"].dump() << "\n";
        }
    }
    for (const auto& [name, r] : report.at("results").items()) {
        os << name << ": ";
        std::string status = r.at("status").get<std::string>();
        if (status != "ok") {
            os << "error - " << r.at("message").get<std::string>() << "\n";
            continue;
        }
        if (name == "validate") {
            os << (r["all_pass"].get<bool>() ? "all checks pass" : "CHECKS FAILED") << "\n";
            for (const auto& c : r["checks"]) {
                os << "    " << (c["pass"].get<bool>() ? "[pass] " : "[FAIL] ")
                   << c["name"].get<std::string>();
                if (c.contains("detail")) os << ": " << c["detail"].get<std::string>();
                os << "\n";
            }
        } else if (name == "delta") {
            os << "sign coordinates " << r["sign_coordinates"].dump() << ", rows "
               << r["rows"].dump() << ", surjective="
               << (r["surjective_onto_pi0"].get<bool>() ? "yes" : "NO") << "   [path "
               << r["path"].get<std::string>() << "]\n";
        } else {
            ordered_json group = r.contains("group") ? r["group"] : ordered_json{};
            os << (group.is_string() ? group.get<std::string>() : std::string("?"));
            os << "   [path " << r["path"].get<std::string>() << "]";
            if (name == "pi0_cartan") {
                os << "  (dim A = " << r["dim_A"].get<int>()
                   << ", dim A_L = " << r["dim_A_L"].get<int>() << ", lattice "
                   << r["lattice"].get<std::string>() << ")";
                if (!r["generators"].empty()) {
                    os << "\n    sign-flip generators:";
                    for (const auto& g : r["generators"]) os << " " << g["sign_flip_nodes"].dump();
                }
            }
            if (name == "pi0_isotropy") {
                if (r.contains("totally_real_path"))
                    os << "  totally-real path agrees="
                       << (r["totally_real_path"]["agrees"].get<bool>() ? "yes" : "NO");
                os << "  H/H0 agrees="
                   << (r["pi0_H_mod_H0"]["agrees"].get<bool>() ? "yes" : "NO");
            }
            os << "\n";
        }
    }
    os << "assumptions: " << report.at("assumptions").dump() << "\n";
    return os.str();
}

ordered_json list_catalog(const realform::Catalog& catalog) {
    ordered_json out;
    ordered_json entries = ordered_json::array();
    for (const realform::CatalogEntry& e : catalog.entries()) {
        ordered_json j;
        j["name"] = e.datum.name;
        j["family"] = e.family;
        j["series"] = std::string(1, e.datum.series);
        j["rank"] = e.datum.rank;
        j["black"] = one_based(e.datum.black);
        ordered_json arrows = ordered_json::array();
        for (auto [a, b] : e.datum.arrows) arrows.push_back(std::vector<int>{a + 1, b + 1});
        j["arrows"] = std::move(arrows);
        entries.push_back(std::move(j));
    }
    out["count"] = catalog.entries().size();
    out["entries"] = std::move(entries);
    return out;
}

std::string catalog_to_text(const ordered_json& listing) {
    std::ostringstream os;
    for (const auto& e : listing.at("entries")) {
        os << e["name"].get<std::string>() << "  [" << e["family"].get<std::string>() << "] "
           << e["series"].get<std::string>() << e["rank"].get<int>() << "  black "
           << e["black"].dump() << "  arrows " << e["arrows"].dump() << "\n";
    }
    os << listing.at("count").get<int>() << " real forms\n";
    return os.str();
}

}  // namespace cli
