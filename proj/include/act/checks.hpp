#ifndef ACT_CHECKS_HPP
#define ACT_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "act/charpoly.hpp"
#include "act/curvature.hpp"
#include "act/jordan.hpp"
#include "act/matrix.hpp"
#include "act/numeric.hpp"
#include "act/parallel.hpp"
#include "act/polymatrix.hpp"
#include "act/polynomial.hpp"
#include "act/prng.hpp"
#include "act/space.hpp"
#include "act/spectral.hpp"

namespace act {

enum class Verdict { holds_on_samples, violated, not_applicable, no_evidence };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds_on_samples: return "holds-on-samples";
        case Verdict::violated: return "violated";
        case Verdict::not_applicable: return "not-applicable";
        default: return "no-evidence";
    }
}

struct CheckParams {
    int samples = 64;  // per cone where cones apply
    std::uint64_t seed = 1;
    double tol = 1e-9;
    long vector_bound = 9;         // coordinate bound for sampled test vectors
    long pit_range = 1000000;      // coordinate range for polynomial identity testing
    int genericity_samples = 12;   // perturbations per classify_generic call
    Rational genericity_radius = rat(1, 10);
    bool force_floating = false;   // route duality through the numeric path even when exact is possible
    int threads = 1;               // worker threads for sampling loops (output is thread-count invariant)
};

// The continuation could not single out an eigenvalue branch; retry with a
// smaller step.
struct continuation_error : std::runtime_error {
    explicit continuation_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::uint64_t splitmix64_of(std::uint64_t v) {
    std::uint64_t s = v;
    return splitmix64(s);
}

namespace detail {

template <class K>
void require_valid(const CurvatureTensor<K>& t, const char* who) {
    SymmetryReport rep = t.validate_symmetries();
    if (!rep.ok())
        throw precondition_error(std::string(who) + ": tensor fails the curvature symmetries (" +
                                 std::to_string(rep.violations.size()) + " violations); rejecting input");
}

inline std::vector<Cone> admissible_cones(const Space& s) {
    if (s.field == Field::complex) return {Cone::any};
    std::vector<Cone> cones;
    if (s.p >= 1) cones.push_back(Cone::spacelike);
    if (s.q >= 1) cones.push_back(Cone::timelike);
    return cones;
}

template <class K>
Vec<K> osserman_reference_vector(const Space& s) {
    std::vector<Vec<K>> candidates;
    candidates.push_back(basis_vector<K>(s, 0));
    if (s.p >= 1 && s.p < s.n) {
        Vec<K> v = basis_vector<K>(s, 0);
        v[static_cast<std::size_t>(s.p)] = K(1);
        candidates.push_back(v);
        v[static_cast<std::size_t>(s.p)] = K(2);
        candidates.push_back(v);
    }
    for (auto& c : candidates)
        if (!is_null(s, c)) return c;
    throw internal_error("no non-null reference vector exists; metric degenerate?");
}

} // namespace detail

// ---- Osserman --------------------------------------------------------------

template <class K>
struct OssermanCertificate {
    std::vector<K> a;  // a_0..a_n with a_n = 1: chi_X(t) = sum_j a_j ||X||^{2(n-j)} t^j
    Vec<K> reference;  // X0 fixing the a_j
    int samples = 0;
    std::uint64_t seed = 0;
    long coordinate_bound = 0;

    // P(t, y) evaluated at y = normsq, as a polynomial in t.
    Poly<K> predicted_char_poly(const K& normsq) const {
        const int n = static_cast<int>(a.size()) - 1;
        std::vector<K> c(a.size(), K(0));
        K ypow = K(1);
        for (int j = n; j >= 0; --j) {  // y^{n-j}: ascending in n-j
            c[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] * ypow;
            ypow = ypow * normsq;
        }
        return Poly<K>(std::move(c));
    }
};

template <class K>
struct OssermanWitness {
    Vec<K> x;
    int coefficient_index = 0;  // j with f_j(X) != a_j ||X||^{2(n-j)}
    K defect = K(0);            // exact nonzero value of the difference
};

template <class K>
struct OssermanResult {
    Verdict verdict = Verdict::no_evidence;
    std::optional<OssermanCertificate<K>> certificate;
    std::optional<OssermanWitness<K>> witness;
};

// Fixes the candidate coefficients a_j at a small deterministic reference
// vector, then tests the polynomial identity f_j(X) = a_j ||X||^{2(n-j)} at
// random integer points. A nonzero defect is an exact disproof; all-pass is
// Schwartz-Zippel evidence with per-sample failure probability <= deg/range.
// Samples draw from per-index derived seeds, so parallel and serial runs
// produce identical results.
template <class K>
OssermanResult<K> is_osserman(const CurvatureTensor<K>& t, int samples, std::uint64_t seed,
                              long pit_range = 1000000, int threads = 1) {
    detail::require_valid(t, "is_osserman");
    const Space& s = t.space();
    const int n = s.n;

    Vec<K> x0 = detail::osserman_reference_vector<K>(s);
    K s0 = norm_sq(s, x0);
    Poly<K> chi0 = char_poly(jacobi_operator(t, x0).mat);
    OssermanCertificate<K> cert;
    cert.reference = x0;
    cert.samples = samples;
    cert.seed = seed;
    cert.a.resize(static_cast<std::size_t>(n + 1));
    {
        K spow = K(1);  // s0^{n-j} descending j
        for (int j = n; j >= 0; --j) {
            cert.a[static_cast<std::size_t>(j)] = chi0.coeff(j) / spow;
            spow = spow * s0;
        }
    }

    long min_range = 4L * n * std::max(samples, 1);
    long bound = std::max(pit_range / 2, (min_range + 1) / 2);
    cert.coordinate_bound = bound;

    Rng base(seed);
    std::function<std::optional<OssermanWitness<K>>(int)> one =
        [&](int sm) -> std::optional<OssermanWitness<K>> {
        Rng rng = base.derived(static_cast<std::uint64_t>(sm));
        Vec<K> x = sample_vector<K>(s, rng, bound, /*require_non_null=*/false, Cone::any);
        K nsq = norm_sq(s, x);
        Poly<K> chi = char_poly(jacobi_operator(t, x).mat);
        K ypow = K(1);
        for (int j = n; j >= 0; --j) {
            K defect = chi.coeff(j) - cert.a[static_cast<std::size_t>(j)] * ypow;
            if (!is_zero(defect)) return OssermanWitness<K>{x, j, defect};
            ypow = ypow * nsq;
        }
        return std::nullopt;
    };
    auto witnesses = parallel_map<std::optional<OssermanWitness<K>>>(samples, threads, one);
    OssermanResult<K> res;
    for (auto& w : witnesses) {
        if (w) {
            res.verdict = Verdict::violated;
            res.witness = std::move(w);
            return res;
        }
    }
    res.verdict = Verdict::holds_on_samples;
    res.certificate = std::move(cert);
    return res;
}

// ---- Jordan-Osserman --------------------------------------------------------

template <class K>
struct JordanOssermanResult {
    Verdict verdict = Verdict::no_evidence;
    OssermanResult<K> osserman;  // gating result: Jordan-Osserman implies Osserman
    std::optional<StructureKey> common_key;
    std::optional<std::pair<Vec<K>, Vec<K>>> witness_vectors;
    std::optional<std::pair<StructureKey, StructureKey>> witness_keys;
};

// Compares the eigenvalue-anonymous Jordan-type key of R_X across sampled
// non-null X from every admissible cone. Pass a precomputed Osserman result
// to skip the gating run.
template <class K>
JordanOssermanResult<K> is_jordan_osserman(const CurvatureTensor<K>& t, int samples,
                                           std::uint64_t seed, long vector_bound = 9,
                                           const OssermanResult<K>* precomputed_osserman = nullptr,
                                           int threads = 1) {
    JordanOssermanResult<K> res;
    res.osserman = precomputed_osserman ? *precomputed_osserman : is_osserman(t, samples, seed);
    if (res.osserman.verdict == Verdict::violated) {
        res.verdict = Verdict::violated;
        return res;
    }
    const Space& s = t.space();
    std::vector<Cone> cones = detail::admissible_cones(s);
    Rng base(splitmix64_of(seed));
    std::function<std::pair<Vec<K>, StructureKey>(int)> one = [&](int sm) {
        Rng rng = base.derived(static_cast<std::uint64_t>(sm));
        Cone cone = cones[static_cast<std::size_t>(sm) % cones.size()];
        Vec<K> x = sample_vector<K>(s, rng, vector_bound, /*require_non_null=*/true, cone);
        StructureKey key = structure_signature(jordan_structure_exact(jacobi_operator(t, x).mat));
        return std::make_pair(std::move(x), std::move(key));
    };
    auto keys = parallel_map<std::pair<Vec<K>, StructureKey>>(samples, threads, one);
    std::optional<StructureKey> key0;
    Vec<K> x_ref;
    for (auto& [x, key] : keys) {
        if (!key0) {
            key0 = key;
            x_ref = x;
        } else if (!(key == *key0)) {
            res.verdict = Verdict::violated;
            res.witness_vectors = std::make_pair(x_ref, x);
            res.witness_keys = std::make_pair(*key0, key);
            return res;
        }
    }
    res.verdict = Verdict::holds_on_samples;
    res.common_key = key0;
    return res;
}

// ---- Semisimplicity ----------------------------------------------------------

template <class K>
struct SemisimpleResult {
    Verdict verdict = Verdict::no_evidence;
    std::vector<std::pair<Vec<K>, bool>> sampled;  // (X, diagonalisable over the field)
    std::optional<Vec<K>> generic_point;
    std::optional<GenericityResult<K>> genericity;
};

namespace detail {

// Perturbation radius small enough that X + delta stays non-null:
// |Delta ||X||^2| <= r (2 sum|x_i| + n r) < |||X||^2| for the returned r.
inline Rational safe_genericity_radius(const Space& s, const Vec<Rational>& x, const Rational& cap) {
    Rational nsq = rat_abs(norm_sq(s, x));
    Rational denom(0);
    for (const Rational& xi : x) denom += rat_abs(xi);
    denom = 2 * denom + s.n;
    Rational r = nsq / (2 * denom);
    return r < cap ? r : cap;
}

inline Rational safe_genericity_radius(const Space&, const Vec<GaussianRational>&, const Rational& cap) {
    return cap;
}

} // namespace detail

// Samples diagonalisability of R_X; a diagonalisable sample whose Jordan type
// is constant on a sampled neighborhood is evidence that the diagonalisable
// set has interior.
template <class K>
SemisimpleResult<K> is_semisimple(const CurvatureTensor<K>& t, int samples, std::uint64_t seed,
                                  long vector_bound = 9, int genericity_samples = 12,
                                  Rational genericity_radius = rat(1, 10)) {
    detail::require_valid(t, "is_semisimple");
    const Space& s = t.space();
    Rng rng(seed);
    SemisimpleResult<K> res;
    int genericity_attempts = 0;
    for (int sm = 0; sm < samples; ++sm) {
        Vec<K> x = sample_vector<K>(s, rng, vector_bound, /*require_non_null=*/true, Cone::any);
        bool diag = is_diagonalisable(jacobi_operator(t, x));
        res.sampled.emplace_back(x, diag);
        if (diag && res.verdict != Verdict::holds_on_samples && genericity_attempts < 4) {
            ++genericity_attempts;
            Rational radius = detail::safe_genericity_radius(s, x, genericity_radius);
            GenericityResult<K> g =
                classify_generic(t, x, genericity_samples, radius, rng.derived(static_cast<std::uint64_t>(sm)));
            if (g.generic_evidence) {
                res.verdict = Verdict::holds_on_samples;
                res.generic_point = x;
                res.genericity = std::move(g);
            }
        }
    }
    if (res.verdict != Verdict::holds_on_samples) res.verdict = Verdict::no_evidence;
    return res;
}

// ---- Duality ----------------------------------------------------------------

struct DualityPair {
    std::string eigenvalue;        // rendered exact value or numeric
    std::complex<double> mu{};     // mu_X as a number
    std::complex<double> mu_dual{};  // <R_Y X, X>/||X||^2
    bool exact_path = false;
    bool pass = false;
    bool flagged_null = false;     // Y is null: excluded from the headline verdict
    bool not_applicable = false;   // e.g. non-real eigenvalue over R
    double rho = 0.0;              // collinearity residual (exact path: 0 or exact-failure norm)
    std::string note;
};

template <class K>
struct DualityCheckResult {
    Vec<K> x;
    bool exact_path = false;
    std::vector<DualityPair> pairs;
    // mutual eigenpairs (pass == true), kept for reciprocity verification
    struct ExactMutualPair {
        K mu;
        Vec<K> y;
        K mu_dual;
    };
    struct NumericMutualPair {
        std::complex<double> mu;
        CVec y;
        std::complex<double> mu_dual;
        // natural magnitude of the two reciprocity sides; values below
        // tol * scale_hint are indistinguishable from zero
        double scale_hint = 0.0;
    };
    std::vector<ExactMutualPair> exact_mutual;
    std::vector<NumericMutualPair> numeric_mutual;
    // exact witnesses for failures: (Y, defect vector) with
    // ||X||^2 * R_Y X - <R_Y X, X> X != 0
    std::vector<std::pair<Vec<K>, Vec<K>>> exact_failures;
    std::vector<CVec> numeric_failure_vectors;

    bool all_unflagged_pass() const {
        for (const auto& p : pairs)
            if (!p.not_applicable && !p.flagged_null && !p.pass) return false;
        return true;
    }
    int flagged_failures() const {
        int c = 0;
        for (const auto& p : pairs)
            if (p.flagged_null && !p.not_applicable && !p.pass) ++c;
        return c;
    }
};

namespace detail {

// Exact eigenvectors of A for eigenvalue mu, with the spec'd choice policy:
// every nullspace basis vector is tested; if the eigenspace has dim > 1, a
// non-null representative is appended when the basis is entirely null and the
// restricted metric is non-degenerate.
template <class K>
std::vector<Vec<K>> eigenspace_test_vectors(const Space& s, const Matrix<K>& a, const K& mu) {
    Matrix<K> shifted = a;
    for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - mu;
    std::vector<Vec<K>> basis = nullspace_basis(shifted);
    if (basis.size() <= 1) return basis;
    bool any_non_null = false;
    for (const auto& b : basis)
        if (!is_null(s, b)) any_non_null = true;
    if (any_non_null) return basis;
    // all-null basis: Gram matrix decides degeneracy; a non-null combination
    // b_i + b_j exists iff some off-diagonal inner product is nonzero
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (is_zero(inner(s, basis[i], basis[j]))) continue;
            basis.push_back(add(basis[i], basis[j]));
            return basis;
        }
    return basis;  // metric degenerate on the eigenspace: nothing to add
}

} // namespace detail

// Tests, for each eigenpair (mu, Y) of R_X, whether R_Y X is collinear with X.
// Exact path when the spectrum is rational; floating path otherwise. Over the
// real field non-real eigenvalues have no real eigenvectors and are reported
// not-applicable.
template <class K>
DualityCheckResult<K> duality_check(const CurvatureTensor<K>& t, const Vec<K>& x, double tol,
                                    bool force_floating = false) {
    const Space& s = t.space();
    if (is_null(s, x)) throw precondition_error("duality_check: X must be non-null");
    DualityCheckResult<K> res;
    res.x = x;
    Operator<K> ax = jacobi_operator(t, x);
    K nsq_x = norm_sq(s, x);

    bool exact = false;
    std::vector<K> exact_eigenvalues;
    if constexpr (std::is_same_v<K, Rational>) {
        if (!force_floating) {
            Poly<K> m = minimal_polynomial(ax.mat);
            RationalRoots rr = rational_roots(m);
            if (rr.fully_split) {
                exact = true;
                for (auto& [root, mult] : rr.roots) exact_eigenvalues.push_back(root);
            }
        }
    }
    res.exact_path = exact;

    if (exact) {
        for (const K& mu : exact_eigenvalues) {
            std::vector<Vec<K>> vecs = detail::eigenspace_test_vectors(s, ax.mat, mu);
            for (const Vec<K>& y : vecs) {
                DualityPair pair;
                pair.exact_path = true;
                pair.eigenvalue = to_string(mu);
                pair.mu = to_complex(mu);
                pair.flagged_null = is_null(s, y);
                Vec<K> z = jacobi_operator(t, y).mat.apply(x);
                K zx = inner(s, z, x);
                K mu_dual = zx / nsq_x;
                pair.mu_dual = to_complex(mu_dual);
                // collinearity: ||X||^2 Z - <Z,X> X = 0 exactly
                Vec<K> defect = sub(scale(nsq_x, z), scale(zx, x));
                pair.pass = is_zero_vec(defect);
                if (pair.pass) res.exact_mutual.push_back({mu, y, mu_dual});
                if (!pair.pass) {
                    CVec dz = to_cvec(defect);
                    double scale_d = max_row_sum_norm(to_complex_dense(jacobi_operator(t, y).mat)) *
                                     euclidean_norm(to_cvec(x)) * std::abs(to_complex(nsq_x));
                    pair.rho = scale_d > 0 ? euclidean_norm(dz) / scale_d : euclidean_norm(dz);
                    res.exact_failures.emplace_back(y, defect);
                }
                res.pairs.push_back(std::move(pair));
            }
        }
        return res;
    }

    // floating path
    NumericTensor nt = to_numeric(t);
    CVec xc = to_cvec(x);
    ComplexDense axn = to_complex_dense(ax.mat);
    EigenDecomposition ed = eigen_decomposition(axn, tol);
    std::complex<double> nsq_xc = inner_bilinear(nt.eps, xc, xc);
    for (const EigenCluster& cl : ed.clusters) {
        bool non_real = std::abs(cl.eigenvalue.imag()) > tol * std::max(1.0, ed.op_norm);
        for (const CVec& v : cl.eigenvectors) {
            DualityPair pair;
            pair.exact_path = false;
            pair.mu = cl.eigenvalue;
            pair.eigenvalue = std::to_string(cl.eigenvalue.real()) +
                              (cl.eigenvalue.imag() >= 0 ? "+" : "") + std::to_string(cl.eigenvalue.imag()) + "i";
            if (s.field == Field::real && non_real) {
                pair.not_applicable = true;
                pair.note = "no real eigenvector for a non-real eigenvalue";
                res.pairs.push_back(std::move(pair));
                continue;
            }
            CVec y = v;
            if (s.field == Field::real) {
                // rotate the complex phase out and take the real part
                std::size_t imax = 0;
                for (std::size_t i = 1; i < y.size(); ++i)
                    if (std::abs(y[i]) > std::abs(y[imax])) imax = i;
                std::complex<double> phase = y[imax] / std::abs(y[imax]);
                for (auto& c : y) c /= phase;
                for (auto& c : y) c = std::complex<double>(c.real(), 0.0);
            }
            std::complex<double> ynsq = inner_bilinear(nt.eps, y, y);
            pair.flagged_null = std::abs(ynsq) <= tol * euclidean_norm(y) * euclidean_norm(y);
            ComplexDense ay = jacobi_numeric(nt, y);
            CVec z = mat_apply(ay, xc);
            std::complex<double> mu_dual = inner_bilinear(nt.eps, z, xc) / nsq_xc;
            pair.mu_dual = mu_dual;
            CVec defect = cvec_axpy(z, -mu_dual, xc);
            double denom = max_row_sum_norm(ay) * euclidean_norm(xc);
            pair.rho = denom > 0 ? euclidean_norm(defect) / denom : euclidean_norm(defect);
            pair.pass = pair.rho <= tol;
            if (pair.pass) {
                double ny = euclidean_norm(y), nx = euclidean_norm(xc);
                double hint = max_row_sum_norm(ay) * nx * nx + ed.op_norm * ny * ny;
                res.numeric_mutual.push_back({cl.eigenvalue, y, mu_dual, hint});
            } else {
                res.numeric_failure_vectors.push_back(y);
            }
            res.pairs.push_back(std::move(pair));
        }
    }
    return res;
}

template <class K>
struct DualityPrincipleResult {
    Verdict verdict = Verdict::no_evidence;
    int samples_checked = 0;
    int pairs_checked = 0;
    int flagged_null_pairs = 0;
    int flagged_failures = 0;  // failures among null-Y pairs (outside the headline verdict)
    std::vector<DualityCheckResult<K>> failures;  // checks containing unflagged failures
    std::vector<DualityCheckResult<K>> all_checks;  // retained for reciprocity verification
};

// Samples parallelize across worker threads with per-index derived seeds;
// results are assembled in sample order, so the thread count cannot change
// the outcome.
template <class K>
DualityPrincipleResult<K> duality_principle(const CurvatureTensor<K>& t, int samples_per_cone,
                                            double tol, std::uint64_t seed, long vector_bound = 9,
                                            bool keep_all = false, bool force_floating = false,
                                            int threads = 1) {
    detail::require_valid(t, "duality_principle");
    const Space& s = t.space();
    std::vector<Cone> cones = detail::admissible_cones(s);
    Rng base(seed);
    const int total = samples_per_cone * static_cast<int>(cones.size());
    std::function<DualityCheckResult<K>(int)> one = [&](int idx) {
        Rng rng = base.derived(static_cast<std::uint64_t>(idx));
        Cone cone = cones[static_cast<std::size_t>(idx) / static_cast<std::size_t>(samples_per_cone)];
        Vec<K> x = sample_vector<K>(s, rng, vector_bound, /*require_non_null=*/true, cone);
        return duality_check(t, x, tol, force_floating);
    };
    std::vector<DualityCheckResult<K>> checks = parallel_map<DualityCheckResult<K>>(total, threads, one);

    DualityPrincipleResult<K> res;
    bool ok = true;
    for (DualityCheckResult<K>& check : checks) {
        ++res.samples_checked;
        for (const auto& p : check.pairs) {
            if (p.not_applicable) continue;
            ++res.pairs_checked;
            if (p.flagged_null) {
                ++res.flagged_null_pairs;
                if (!p.pass) ++res.flagged_failures;
            }
        }
        if (!check.all_unflagged_pass()) {
            ok = false;
            res.failures.push_back(check);
        }
        if (keep_all) res.all_checks.push_back(std::move(check));
    }
    res.verdict = ok ? Verdict::holds_on_samples : Verdict::violated;
    return res;
}

// ---- Reciprocity -------------------------------------------------------------

// mu_X ||Y||^2 = mu_Y ||X||^2 for a mutual eigenpair; exact equality on the
// exact path, relative tolerance on the floating path.
template <class K>
bool reciprocity_check(const Space& s, const K& mu_x, const Vec<K>& y, const K& mu_y,
                       const Vec<K>& x) {
    K lhs = mu_x * norm_sq(s, y);
    K rhs = mu_y * norm_sq(s, x);
    return lhs == rhs;
}

inline bool reciprocity_check_numeric(const std::vector<int>& eps, std::complex<double> mu_x,
                                      const CVec& y, std::complex<double> mu_y, const CVec& x,
                                      double tol, double* rel_defect = nullptr,
                                      double scale_hint = 0.0) {
    std::complex<double> lhs = mu_x * inner_bilinear(eps, y, y);
    std::complex<double> rhs = mu_y * inner_bilinear(eps, x, x);
    // both sides below tol * scale_hint are numerically zero (e.g. the
    // eigenvalue-zero pair), so the comparison is relative to the problem
    // scale, not to the noise itself
    double scale = std::max({std::abs(lhs), std::abs(rhs), scale_hint});
    double defect = std::abs(lhs - rhs);
    if (rel_defect) *rel_defect = scale > 0 ? defect / scale : defect;
    if (scale == 0.0) return true;
    return defect <= tol * scale;
}

// ---- Eigenvalue continuation and the derivative identity ---------------------

struct ContinuedPair {
    std::complex<double> eigenvalue;
    CVec eigenvector;  // projection of the reference eigenvector onto the branch eigenspace
    double residual = 0.0;
};

// Follows the eigenvalue branch nearest to `mu` whose eigenspace carries the
// largest projection of `e`. Y = X recovers (mu, e).
ContinuedPair eigen_continuation_numeric(const NumericTensor& t, const CVec& y,
                                         std::complex<double> mu, const CVec& e, double tol);

template <class K>
ContinuedPair eigen_continuation(const CurvatureTensor<K>& t, const Vec<K>& /*x*/,
                                 std::complex<double> mu, const CVec& e, const Vec<K>& y,
                                 double tol) {
    NumericTensor nt = to_numeric(t);
    return eigen_continuation_numeric(nt, to_cvec(y), mu, e, tol);
}

struct DerivativeIdentityResult {
    bool applicable = true;      // false when ||e||^2 = 0 (identity degenerates)
    double lhs = 0.0;            // 2 <R_e X, T>, computed exactly and rounded once
    double dlambda_h = 0.0;      // central difference at step h
    double dlambda_h2 = 0.0;     // central difference at step h/2
    double r_h = 0.0;            // |lhs - dlambda_h * ||e||^2|
    double r_h2 = 0.0;
    double scale = 0.0;          // normalization for relative readings
    double rel_h = 0.0;
    double rel_h2 = 0.0;
    double ratio = 0.0;          // r(h/2) / r(h); ~1/4 when truncation-dominated
    double noise_floor = 0.0;    // both-residuals-below means the scheme hit roundoff
};

// Checks 2 <R_e X, T> = (d lambda)(T) ||e||^2 for an eigenpair (mu, e) of R_X
// and T perpendicular to X, estimating the derivative by central differences
// of the continued eigenvalue. The left side and ||e||^2 are exact.
template <class K>
DerivativeIdentityResult derivative_identity_check(const CurvatureTensor<K>& t, const Vec<K>& x,
                                                   const K& mu, const Vec<K>& e, const Vec<K>& t_dir,
                                                   double h, double tol) {
    const Space& s = t.space();
    if (!is_zero(inner(s, x, t_dir)))
        throw precondition_error("derivative_identity_check: T must be orthogonal to X");
    DerivativeIdentityResult res;
    K e_nsq = norm_sq(s, e);
    if (is_zero(e_nsq)) {
        res.applicable = false;
        return res;
    }
    Vec<K> rex = jacobi_operator(t, e).mat.apply(x);
    K lhs_exact = K(2) * inner(s, rex, t_dir);
    res.lhs = to_complex(lhs_exact).real();
    double e_nsq_d = to_complex(e_nsq).real();

    NumericTensor nt = to_numeric(t);
    CVec xc = to_cvec(x), tc = to_cvec(t_dir), ec = to_cvec(e);
    std::complex<double> mu_c = to_complex(mu);
    auto dlambda = [&](double step) {
        CVec yp = cvec_axpy(xc, step, tc);
        CVec ym = cvec_axpy(xc, -step, tc);
        ContinuedPair pp = eigen_continuation_numeric(nt, yp, mu_c, ec, tol);
        ContinuedPair pm = eigen_continuation_numeric(nt, ym, mu_c, ec, tol);
        return ((pp.eigenvalue - pm.eigenvalue) / (2.0 * step)).real();
    };
    res.dlambda_h = dlambda(h);
    res.dlambda_h2 = dlambda(h / 2.0);
    res.r_h = std::abs(res.lhs - res.dlambda_h * e_nsq_d);
    res.r_h2 = std::abs(res.lhs - res.dlambda_h2 * e_nsq_d);
    double op_e = max_row_sum_norm(to_complex_dense(jacobi_operator(t, e).mat));
    double op_x = max_row_sum_norm(to_complex_dense(jacobi_operator(t, x).mat));
    res.scale = 2.0 * op_e * euclidean_norm(xc) * euclidean_norm(tc) +
                std::abs(res.dlambda_h) * std::abs(e_nsq_d) + op_x * std::abs(e_nsq_d);
    res.rel_h = res.scale > 0 ? res.r_h / res.scale : res.r_h;
    res.rel_h2 = res.scale > 0 ? res.r_h2 / res.scale : res.r_h2;
    res.ratio = res.r_h > 0 ? res.r_h2 / res.r_h : 0.0;
    res.noise_floor = 1e-9 * res.scale;
    return res;
}

struct RadialDerivativeResult {
    double dlambda = 0.0;  // central difference of lambda((1 +/- h) X)
    double target = 0.0;   // 2 mu
    double rel = 0.0;      // |dlambda - 2 mu| / max(|2 mu|, ||R_X||)
};

// Homogeneity companion check: (d lambda)(X) = 2 mu.
template <class K>
RadialDerivativeResult radial_derivative_check(const CurvatureTensor<K>& t, const Vec<K>& x,
                                               const K& mu, const Vec<K>& e, double h, double tol) {
    NumericTensor nt = to_numeric(t);
    CVec xc = to_cvec(x), ec = to_cvec(e);
    std::complex<double> mu_c = to_complex(mu);
    CVec yp = cvec_scale(1.0 + h, xc), ym = cvec_scale(1.0 - h, xc);
    ContinuedPair pp = eigen_continuation_numeric(nt, yp, mu_c * (1.0 + h) * (1.0 + h), ec, tol);
    ContinuedPair pm = eigen_continuation_numeric(nt, ym, mu_c * (1.0 - h) * (1.0 - h), ec, tol);
    RadialDerivativeResult res;
    res.dlambda = ((pp.eigenvalue - pm.eigenvalue) / (2.0 * h)).real();
    res.target = 2.0 * mu_c.real();
    double op_x = max_row_sum_norm(to_complex_dense(jacobi_operator(t, x).mat));
    double scale = std::max(std::abs(res.target), op_x);
    res.rel = scale > 0 ? std::abs(res.dlambda - res.target) / scale : std::abs(res.dlambda - res.target);
    return res;
}

// ---- Minimal polynomial test (Theorem-2 machinery) ---------------------------

template <class K>
struct MinimalPolyTestResult {
    bool applicable = false;  // requires an Osserman certificate
    bool vanishes = false;    // F_X(R_X) = 0 exactly
    int p = 0;                // number of distinct eigenvalue branches
    std::string f_x;          // the tested polynomial, rendered
};

// F_X(t) = prod_k (t - mu_k ||X||^2) is the squarefree part of the
// certificate's predicted characteristic polynomial at X; vanishing of
// F_X(R_X) at an interior sample plus Osserman implies diagonalisability for
// every non-null X.
template <class K>
MinimalPolyTestResult<K> minimal_poly_test(const CurvatureTensor<K>& t, const Vec<K>& x,
                                           const OssermanResult<K>& osserman) {
    MinimalPolyTestResult<K> res;
    if (osserman.verdict != Verdict::holds_on_samples || !osserman.certificate) return res;
    const Space& s = t.space();
    if (is_null(s, x)) throw precondition_error("minimal_poly_test: X must be non-null");
    res.applicable = true;
    K nsq = norm_sq(s, x);
    Poly<K> predicted = osserman.certificate->predicted_char_poly(nsq);
    Poly<K> f = squarefree_part(predicted);
    res.p = f.degree();
    res.f_x = to_string(f);
    Matrix<K> value = eval_at_matrix(f, jacobi_operator(t, x).mat);
    res.vanishes = value.is_zero_matrix();
    return res;
}

} // namespace act

#endif
