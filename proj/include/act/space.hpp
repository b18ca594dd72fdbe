#ifndef ACT_SPACE_HPP
#define ACT_SPACE_HPP

#include <string>
#include <type_traits>
#include <vector>

#include "act/errors.hpp"
#include "act/prng.hpp"
#include "act/rational.hpp"

namespace act {

enum class Field { real, complex };

inline std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

// Pseudo-Euclidean space: dimension n, signature (p, q), metric diag(+1 x p,
// -1 x q). Over the complex field the signature is retained for bookkeeping
// only; the form stays the stated diagonal one.
struct Space {
    int n = 0;
    int p = 0, q = 0;
    std::vector<int> eps;  // +1 / -1 diagonal entries, the p positive ones first
    Field field = Field::real;

    static Space make(int p, int q, Field field = Field::real) {
        if (p < 0 || q < 0 || p + q < 2) throw usage_error("signature requires p,q >= 0 and p+q >= 2");
        Space s;
        s.n = p + q;
        s.p = p;
        s.q = q;
        s.field = field;
        s.eps.assign(static_cast<std::size_t>(s.n), 1);
        for (int i = p; i < s.n; ++i) s.eps[static_cast<std::size_t>(i)] = -1;
        return s;
    }

    bool riemannian() const { return q == 0; }
    std::string signature_str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

template <class K>
using Vec = std::vector<K>;

template <class K>
inline void check_dim(const Space& s, const Vec<K>& x, const char* what) {
    if (static_cast<int>(x.size()) != s.n)
        throw usage_error(std::string(what) + ": vector dimension " + std::to_string(x.size()) +
                          " does not match space dimension " + std::to_string(s.n));
}

// <X, Y> = sum_i eps_i x_i y_i. Symmetric and bilinear (not Hermitian over C).
template <class K>
K inner(const Space& s, const Vec<K>& x, const Vec<K>& y) {
    check_dim(s, x, "inner");
    check_dim(s, y, "inner");
    K acc = K(0);
    for (int i = 0; i < s.n; ++i) {
        K term = x[i] * y[i];
        if (s.eps[i] < 0)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return acc;
}

template <class K>
K norm_sq(const Space& s, const Vec<K>& x) {
    return inner(s, x, x);
}

template <class K>
bool is_null(const Space& s, const Vec<K>& x) {
    return is_zero(norm_sq(s, x));
}

// Floating zero-test variant: |<X,X>| <= tol * ||X||^2_Euclidean.
inline bool is_null(const Space& s, const Vec<double>& x, const ScalarDomain& domain) {
    check_dim(s, x, "is_null");
    double g = 0.0, e = 0.0;
    for (int i = 0; i < s.n; ++i) {
        g += s.eps[i] * x[i] * x[i];
        e += x[i] * x[i];
    }
    return domain.is_zero(g, e);
}

template <class K>
Vec<K> basis_vector(const Space& s, int i) {
    Vec<K> e(static_cast<std::size_t>(s.n), K(0));
    e[static_cast<std::size_t>(i)] = K(1);
    return e;
}

template <class K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class K>
Vec<K> sub(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class K>
Vec<K> scale(const K& c, const Vec<K>& a) {
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

template <class K>
bool is_zero_vec(const Vec<K>& a) {
    for (const K& v : a)
        if (!is_zero(v)) return false;
    return true;
}

// Basis of X^perp for non-null X: v_i = ||X||^2 e_i - <e_i,X> X with one
// dependent index dropped. Each v_i is exactly orthogonal to X and the n-1
// returned vectors are linearly independent.
template <class K>
std::vector<Vec<K>> orthogonal_complement_basis(const Space& s, const Vec<K>& x) {
    check_dim(s, x, "orthogonal_complement_basis");
    K nsq = norm_sq(s, x);
    if (is_zero(nsq)) throw precondition_error("orthogonal_complement_basis: X is null (or zero)");
    int drop = -1;
    for (int i = 0; i < s.n; ++i) {
        if (!is_zero(x[i])) {
            drop = i;
            break;
        }
    }
    std::vector<Vec<K>> basis;
    basis.reserve(static_cast<std::size_t>(s.n - 1));
    for (int i = 0; i < s.n; ++i) {
        if (i == drop) continue;
        K ci = s.eps[i] < 0 ? K(-x[i]) : x[i];  // <e_i, X>
        Vec<K> v(static_cast<std::size_t>(s.n), K(0));
        for (int j = 0; j < s.n; ++j) v[j] = K(0) - ci * x[j];
        v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + nsq;
        basis.push_back(std::move(v));
    }
    return basis;
}

enum class Cone { any, spacelike, timelike };

inline std::string to_string(Cone c) {
    switch (c) {
        case Cone::spacelike: return "spacelike";
        case Cone::timelike: return "timelike";
        default: return "any";
    }
}

namespace detail {
inline bool cone_admissible(const Space& s, Cone cone) {
    if (cone == Cone::spacelike) return s.p >= 1;
    if (cone == Cone::timelike) return s.q >= 1;
    return true;
}
} // namespace detail

// Integer-coordinate sample, uniform per coordinate in [-bound, bound],
// rejection-resampled until the null/cone constraints hold. Over the complex
// field coordinates are Gaussian integers and cone constraints are rejected.
template <class K>
Vec<K> sample_vector(const Space& s, Rng& rng, long bound, bool require_non_null = true,
                     Cone cone = Cone::any) {
    if (bound < 1) throw usage_error("sample_vector: coordinate bound must be >= 1");
    constexpr bool complex_scalar = std::is_same_v<K, GaussianRational>;
    if (cone != Cone::any) {
        if (s.field == Field::complex || complex_scalar)
            throw precondition_error("sample_vector: cone constraints need a real scalar field");
        if (!detail::cone_admissible(s, cone))
            throw precondition_error("sample_vector: cone " + to_string(cone) +
                                     " is empty in signature " + s.signature_str());
    }
    const int max_retries = 10000;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Vec<K> x(static_cast<std::size_t>(s.n));
        for (int i = 0; i < s.n; ++i) {
            if constexpr (complex_scalar) {
                x[i] = GaussianRational(rat(rng.uniform_int(-bound, bound)),
                                        rat(rng.uniform_int(-bound, bound)));
            } else {
                x[i] = K(rng.uniform_int(-bound, bound));
            }
        }
        K nsq = norm_sq(s, x);
        if (require_non_null && is_zero(nsq)) continue;
        if constexpr (!complex_scalar) {
            if (cone == Cone::spacelike && sgn(nsq) <= 0) continue;
            if (cone == Cone::timelike && sgn(nsq) >= 0) continue;
        }
        return x;
    }
    throw precondition_error("sample_vector: constraints unsatisfied after bounded retries");
}

template <class K>
std::string to_string(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace act

#endif
