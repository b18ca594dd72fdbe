#include "act/report.hpp"

namespace act {

namespace {

nlohmann::json key_json(const StructureKey& key) {
    nlohmann::json j;
    j["p"] = key.p();
    j["blocks"] = key.blocks;
    j["text"] = key.to_string();
    return j;
}

template <class K>
nlohmann::json vec_json(const Vec<K>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const K& c : v) arr.push_back(to_string(c));
    return arr;
}

} // namespace

template <class K>
nlohmann::json render_report(const FullReport<K>& rep, const nlohmann::json& tensor_desc,
                             const std::string& timestamp) {
    nlohmann::json j;
    j["library_version"] = ACT_VERSION;
    j["timestamp"] = timestamp;
    j["tensor"] = tensor_desc;
    j["parameters"] = {{"samples", rep.params.samples},
                       {"seed", rep.params.seed},
                       {"tolerance", rep.params.tol},
                       {"vector_bound", rep.params.vector_bound},
                       {"pit_range", rep.params.pit_range},
                       {"genericity_samples", rep.params.genericity_samples},
                       {"genericity_radius", to_string(rep.params.genericity_radius)},
                       {"domain", rep.params.force_floating ? "floating" : "exact"}};

    nlohmann::json sym;
    sym["ok"] = rep.symmetry.ok();
    sym["violations"] = nlohmann::json::array();
    for (const auto& v : rep.symmetry.violations) sym["violations"].push_back(v.to_string());
    j["symmetry"] = sym;

    nlohmann::json oss;
    oss["verdict"] = to_string(rep.osserman.verdict);
    if (rep.osserman.certificate) {
        const auto& cert = *rep.osserman.certificate;
        nlohmann::json cj;
        cj["a"] = nlohmann::json::array();
        for (const K& a : cert.a) cj["a"].push_back(to_string(a));
        cj["reference"] = vec_json(cert.reference);
        cj["samples"] = cert.samples;
        cj["seed"] = cert.seed;
        cj["coordinate_bound"] = cert.coordinate_bound;
        oss["certificate"] = cj;
    }
    if (rep.osserman.witness) {
        const auto& w = *rep.osserman.witness;
        oss["witness"] = {{"x", vec_json(w.x)},
                          {"coefficient_index", w.coefficient_index},
                          {"defect", to_string(w.defect)}};
    }
    j["osserman"] = oss;

    nlohmann::json jo;
    jo["verdict"] = to_string(rep.jordan_osserman.verdict);
    if (rep.jordan_osserman.common_key) jo["common_structure"] = key_json(*rep.jordan_osserman.common_key);
    if (rep.jordan_osserman.witness_vectors) {
        jo["witness"] = {{"x1", vec_json(rep.jordan_osserman.witness_vectors->first)},
                         {"x2", vec_json(rep.jordan_osserman.witness_vectors->second)},
                         {"key1", key_json(rep.jordan_osserman.witness_keys->first)},
                         {"key2", key_json(rep.jordan_osserman.witness_keys->second)}};
    }
    j["jordan_osserman"] = jo;

    nlohmann::json ss;
    ss["verdict"] = to_string(rep.semisimple.verdict);
    ss["diagonalisable_samples"] = nlohmann::json::array();
    for (const auto& [x, diag] : rep.semisimple.sampled)
        ss["diagonalisable_samples"].push_back({{"x", vec_json(x)}, {"diagonalisable", diag}});
    if (rep.semisimple.generic_point) {
        ss["generic_point"] = vec_json(*rep.semisimple.generic_point);
        ss["genericity"] = {{"samples", rep.semisimple.genericity->samples_checked},
                            {"key", key_json(rep.semisimple.genericity->key_at_x)}};
    }
    j["semisimple"] = ss;

    nlohmann::json du;
    du["verdict"] = to_string(rep.duality.verdict);
    du["samples_checked"] = rep.duality.samples_checked;
    du["pairs_checked"] = rep.duality.pairs_checked;
    du["flagged_null_pairs"] = rep.duality.flagged_null_pairs;
    du["flagged_failures"] = rep.duality.flagged_failures;
    du["failures"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.duality.failures.size() && i < 8; ++i) {
        const auto& fail = rep.duality.failures[i];
        nlohmann::json fj;
        fj["x"] = vec_json(fail.x);
        fj["exact_path"] = fail.exact_path;
        fj["pairs"] = nlohmann::json::array();
        for (const auto& p : fail.pairs) {
            if (p.pass || p.not_applicable) continue;
            fj["pairs"].push_back({{"eigenvalue", p.eigenvalue},
                                   {"rho", p.rho},
                                   {"flagged_null", p.flagged_null}});
        }
        for (const auto& [y, defect] : fail.exact_failures) {
            fj["exact_witnesses"].push_back({{"y", vec_json(y)}, {"defect", vec_json(defect)}});
        }
        du["failures"].push_back(fj);
    }
    j["duality"] = du;

    nlohmann::json mp;
    mp["applicable"] = rep.minimal_poly.applicable;
    if (rep.minimal_poly.applicable) {
        mp["vanishes"] = rep.minimal_poly.vanishes;
        mp["p"] = rep.minimal_poly.p;
        mp["f_x"] = rep.minimal_poly.f_x;
        if (rep.minimal_poly_point) mp["x"] = vec_json(*rep.minimal_poly_point);
        mp["note"] = rep.minimal_poly.vanishes
                         ? "F_X(R_X) = 0 at an interior sample with the Osserman certificate implies "
                           "diagonalisability at every non-null vector"
                         : "F_X(R_X) != 0: the Jacobi operator carries a nilpotent part";
    }
    j["minimal_poly_test"] = mp;

    nlohmann::json dc = nlohmann::json::array();
    for (const auto& triple : rep.derivative_checks) {
        dc.push_back({{"x", vec_json(triple.x)},
                      {"mu", to_string(triple.mu)},
                      {"e", vec_json(triple.e)},
                      {"t_dir", vec_json(triple.t_dir)},
                      {"lhs", triple.identity.lhs},
                      {"dlambda_h", triple.identity.dlambda_h},
                      {"r_h", triple.identity.r_h},
                      {"r_h2", triple.identity.r_h2},
                      {"rel_h", triple.identity.rel_h},
                      {"ratio", triple.identity.ratio},
                      {"radial_dlambda", triple.radial.dlambda},
                      {"radial_target", triple.radial.target},
                      {"radial_rel", triple.radial.rel}});
    }
    j["derivative_identity"] = {{"triples", dc}};
    if (!rep.derivative_note.empty()) j["derivative_identity"]["note"] = rep.derivative_note;

    j["reciprocity"] = {{"checked", rep.reciprocity.checked},
                        {"failures", rep.reciprocity.failures},
                        {"max_rel_defect", rep.reciprocity.max_rel_defect}};

    j["cross_validation"] = {{"theorem1_consistent", rep.theorem1_consistent},
                             {"theorem2_consistent", rep.theorem2_consistent},
                             {"notes", rep.notes}};
    return j;
}

template nlohmann::json render_report<Rational>(const FullReport<Rational>&, const nlohmann::json&,
                                                const std::string&);
template nlohmann::json render_report<GaussianRational>(const FullReport<GaussianRational>&,
                                                        const nlohmann::json&, const std::string&);

nlohmann::json report_without_timestamp(nlohmann::json report) {
    report.erase("timestamp");
    return report;
}

} // namespace act
