#ifndef ACT_REPORT_HPP
#define ACT_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "act/catalog.hpp"
#include "act/checks.hpp"
#include "act/version.hpp"

namespace act {

// Everything one report run produced, fully typed. Rendering to the
// machine-readable report file happens in render_report.
template <class K>
struct FullReport {
    CheckParams params;
    SymmetryReport symmetry;
    OssermanResult<K> osserman;
    JordanOssermanResult<K> jordan_osserman;
    SemisimpleResult<K> semisimple;
    DualityPrincipleResult<K> duality;
    MinimalPolyTestResult<K> minimal_poly;
    std::optional<Vec<K>> minimal_poly_point;

    struct DerivativeTriple {
        Vec<K> x;
        K mu;
        Vec<K> e;
        Vec<K> t_dir;
        DerivativeIdentityResult identity;
        RadialDerivativeResult radial;
    };
    std::vector<DerivativeTriple> derivative_checks;
    std::string derivative_note;

    struct ReciprocitySummary {
        int checked = 0;
        int failures = 0;
        double max_rel_defect = 0.0;
    } reciprocity;

    bool theorem1_consistent = true;
    bool theorem2_consistent = true;
    std::vector<std::string> notes;

    bool consistent() const { return theorem1_consistent && theorem2_consistent; }
    bool any_violation() const {
        return osserman.verdict == Verdict::violated || jordan_osserman.verdict == Verdict::violated ||
               duality.verdict == Verdict::violated;
    }
};

namespace detail {

// Exact eigenpairs (mu, e) of R_X with non-null e, when the spectrum is
// rational; the derivative-identity spot checks need them.
inline std::vector<std::pair<Rational, Vec<Rational>>> exact_non_null_eigenpairs(
    const CurvatureTensor<Rational>& t, const Vec<Rational>& x) {
    std::vector<std::pair<Rational, Vec<Rational>>> out;
    Operator<Rational> ax = jacobi_operator(t, x);
    RationalRoots rr = rational_roots(minimal_polynomial(ax.mat));
    if (!rr.fully_split) return out;
    for (const auto& [mu, mult] : rr.roots)
        for (const Vec<Rational>& y : eigenspace_test_vectors(t.space(), ax.mat, mu))
            if (!is_null(t.space(), y)) out.emplace_back(mu, y);
    return out;
}

} // namespace detail

// Runs every verifier, the derivative-identity spot checks where an exact
// eigenpair is available, reciprocity over all mutual eigenpairs produced,
// and the two theorem-level cross-validations. A cross-validation failure is
// a library-bug signal, reported and never reconciled.
template <class K>
FullReport<K> full_report(const CurvatureTensor<K>& t, const CheckParams& params) {
    FullReport<K> rep;
    rep.params = params;
    rep.symmetry = t.validate_symmetries();
    if (!rep.symmetry.ok())
        throw precondition_error("full_report: tensor fails the curvature symmetries; run validate for details");

    rep.osserman = is_osserman(t, params.samples, params.seed, params.pit_range, params.threads);
    rep.jordan_osserman = is_jordan_osserman(t, params.samples, splitmix64_of(params.seed ^ 0x6a09e667f3bcc908ULL),
                                             params.vector_bound, &rep.osserman, params.threads);
    rep.semisimple = is_semisimple(t, params.samples, splitmix64_of(params.seed ^ 0xbb67ae8584caa73bULL),
                                   params.vector_bound, params.genericity_samples, params.genericity_radius);
    rep.duality = duality_principle(t, params.samples, params.tol, splitmix64_of(params.seed ^ 0x3c6ef372fe94f82bULL),
                                    params.vector_bound, /*keep_all=*/true, params.force_floating,
                                    params.threads);

    if (rep.osserman.verdict == Verdict::holds_on_samples) {
        Vec<K> x0 = rep.osserman.certificate->reference;
        rep.minimal_poly = minimal_poly_test(t, x0, rep.osserman);
        rep.minimal_poly_point = x0;
    }

    // Derivative-identity spot checks (real exact tensors with rational
    // spectrum at the probe points; otherwise noted and skipped).
    if constexpr (std::is_same_v<K, Rational>) {
        if (t.space().field == Field::real && !t.is_zero_tensor()) {
            Rng rng(splitmix64_of(params.seed ^ 0xa54ff53a5f1d36f1ULL));
            int made = 0;
            for (int attempt = 0; attempt < 8 && made < 3; ++attempt) {
                Vec<K> x = sample_vector<K>(t.space(), rng, 3, true, Cone::any);
                Rational radius = detail::safe_genericity_radius(t.space(), x, params.genericity_radius);
                GenericityResult<K> gen =
                    classify_generic(t, x, params.genericity_samples, radius, rng.derived(static_cast<std::uint64_t>(attempt)));
                if (!gen.generic_evidence) continue;
                auto pairs = detail::exact_non_null_eigenpairs(t, x);
                if (pairs.empty()) continue;
                std::vector<Vec<K>> comp = orthogonal_complement_basis(t.space(), x);
                const auto& [mu, e] = pairs.front();
                double h = 1e-4 * euclidean_norm(to_cvec(x));
                typename FullReport<K>::DerivativeTriple triple{x, mu, e, comp.front(), {}, {}};
                try {
                    triple.identity = derivative_identity_check(t, x, mu, e, comp.front(), h, params.tol);
                    triple.radial = radial_derivative_check(t, x, mu, e, h, params.tol);
                    rep.derivative_checks.push_back(std::move(triple));
                    ++made;
                } catch (const continuation_error&) {
                    continue;
                }
            }
            if (made == 0)
                rep.derivative_note = "no generic point with a rational non-null eigenpair found at small bounds";
        } else if (!t.is_zero_tensor()) {
            rep.derivative_note = "derivative spot checks run on real tensors only";
        }
    } else {
        rep.derivative_note = "derivative spot checks run on real tensors only";
    }

    // Reciprocity over every mutual eigenpair the duality run produced.
    for (const DualityCheckResult<K>& check : rep.duality.all_checks) {
        for (const auto& mp : check.exact_mutual) {
            ++rep.reciprocity.checked;
            if (!reciprocity_check(t.space(), mp.mu, mp.y, mp.mu_dual, check.x)) ++rep.reciprocity.failures;
        }
        CVec xc = to_cvec(check.x);
        for (const auto& mp : check.numeric_mutual) {
            ++rep.reciprocity.checked;
            double rel = 0.0;
            if (!reciprocity_check_numeric(t.space().eps, mp.mu, mp.y, mp.mu_dual, xc, params.tol, &rel,
                                           mp.scale_hint))
                ++rep.reciprocity.failures;
            rep.reciprocity.max_rel_defect = std::max(rep.reciprocity.max_rel_defect, rel);
        }
    }

    // Cross-validation against the two theorems.
    if (rep.jordan_osserman.verdict == Verdict::holds_on_samples &&
        rep.duality.verdict == Verdict::violated) {
        rep.theorem1_consistent = false;
        rep.notes.push_back(
            "inconsistency: Jordan-Osserman holds on samples but the duality principle is violated");
    }
    if (rep.semisimple.verdict == Verdict::holds_on_samples) {
        if (rep.osserman.verdict == Verdict::holds_on_samples && rep.duality.verdict == Verdict::violated) {
            rep.theorem2_consistent = false;
            rep.notes.push_back("inconsistency: semisimple and Osserman hold but duality is violated");
        }
        if (rep.duality.verdict == Verdict::holds_on_samples && rep.osserman.verdict == Verdict::violated) {
            rep.theorem2_consistent = false;
            rep.notes.push_back(
                "inconsistency: semisimple and duality hold on samples but Osserman is violated; "
                "enlarge the sampling");
        }
    }
    if (rep.reciprocity.failures > 0) {
        rep.theorem1_consistent = false;
        rep.notes.push_back("inconsistency: a mutual eigenpair violates the reciprocity identity");
    }
    return rep;
}

// Machine-readable rendering. `tensor_desc` echoes the input (constructor
// spec or file reference); `timestamp` may be empty and is excluded from the
// determinism comparison either way.
template <class K>
nlohmann::json render_report(const FullReport<K>& rep, const nlohmann::json& tensor_desc,
                             const std::string& timestamp);

nlohmann::json report_without_timestamp(nlohmann::json report);

} // namespace act

#endif
