#ifndef ACT_CURVATURE_HPP
#define ACT_CURVATURE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "act/errors.hpp"
#include "act/matrix.hpp"
#include "act/space.hpp"

namespace act {

// Dense component array R_{ijkl}, index ((i*n+j)*n+k)*n+l, 0-based.
template <class K>
using DenseComponents = std::vector<K>;

inline std::size_t dense_index(int n, int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * n + j) * n + k) * n + l);
}

struct SymmetryViolation {
    enum class Family { antisymmetry, pair_symmetry, bianchi };
    Family family;
    int i, j, k, l;  // 0-based
    std::string defect;

    std::string family_name() const {
        switch (family) {
            case Family::antisymmetry: return "antisymmetry";
            case Family::pair_symmetry: return "pair-symmetry";
            default: return "bianchi";
        }
    }
    // File format and CLI output are 1-based.
    std::string to_string() const {
        return family_name() + " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               std::to_string(k + 1) + "," + std::to_string(l + 1) + ") defect " + defect;
    }
};

struct SymmetryReport {
    std::vector<SymmetryViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Index of the unordered pair (i<j) among the m = n(n-1)/2 pairs.
inline int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

// Upper-triangular slot index for q1 <= q2 among m pair indices.
inline int slot_index(int m, int q1, int q2) { return q1 * m - q1 * (q1 - 1) / 2 + (q2 - q1); }

struct Canon {
    int slot;  // -1 when the component vanishes identically (i==j or k==l)
    int sign;
};

inline Canon canonicalize(int n, int i, int j, int k, int l) {
    if (i == j || k == l) return {-1, 0};
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    int m = n * (n - 1) / 2;
    int q1 = pair_index(n, i, j), q2 = pair_index(n, k, l);
    if (q1 > q2) std::swap(q1, q2);
    return {slot_index(m, q1, q2), sign};
}

} // namespace detail

// Algebraic curvature tensor. Components R_{ijkl} = <R(e_i,e_j)e_k, e_l> are
// stored on canonical orbit representatives of the pair-symmetry group
// (i<j, k<l, pairs ordered), so antisymmetry and pair symmetry hold by
// construction on expansion; the first Bianchi identity is a property of the
// stored values and is validated, not enforced.
template <class K>
class CurvatureTensor {
  public:
    const Space& space() const { return space_; }

    // Build from a component formula evaluated on canonical representatives.
    // Used by the catalog constructors, whose formulas satisfy the symmetries
    // identically.
    static CurvatureTensor from_formula(const Space& s,
                                        const std::function<K(int, int, int, int)>& formula) {
        CurvatureTensor t(s);
        const int n = s.n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        detail::Canon c = detail::canonicalize(n, i, j, k, l);
                        if (detail::pair_index(n, i, j) > detail::pair_index(n, k, l)) continue;
                        t.slots_[static_cast<std::size_t>(c.slot)] = formula(i, j, k, l);
                    }
        return t;
    }

    // Validate a user-supplied dense array and compress it. Throws input_error
    // listing the violated quadruples.
    static CurvatureTensor from_dense(const Space& s, const DenseComponents<K>& dense) {
        SymmetryReport rep = validate_dense(s, dense);
        if (!rep.ok()) {
            std::string msg = "curvature components violate the required symmetries:";
            for (std::size_t v = 0; v < rep.violations.size() && v < 8; ++v)
                msg += "\n  " + rep.violations[v].to_string();
            if (rep.violations.size() > 8)
                msg += "\n  ... (" + std::to_string(rep.violations.size() - 8) + " more)";
            throw input_error(msg);
        }
        CurvatureTensor t(s);
        const int n = s.n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        if (detail::pair_index(n, i, j) > detail::pair_index(n, k, l)) continue;
                        detail::Canon c = detail::canonicalize(n, i, j, k, l);
                        t.slots_[static_cast<std::size_t>(c.slot)] = dense[dense_index(n, i, j, k, l)];
                    }
        return t;
    }

    static CurvatureTensor zero(const Space& s) { return CurvatureTensor(s); }

    K component(int i, int j, int k, int l) const {
        const int n = space_.n;
        if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n || j >= n || k >= n || l >= n)
            throw usage_error("curvature component index out of range");
        detail::Canon c = detail::canonicalize(n, i, j, k, l);
        if (c.slot < 0) return K(0);
        const K& v = slots_[static_cast<std::size_t>(c.slot)];
        return c.sign < 0 ? K(K(0) - v) : v;
    }

    DenseComponents<K> dense() const {
        const int n = space_.n;
        DenseComponents<K> d(static_cast<std::size_t>(n) * n * n * n, K(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (k == l) continue;
                        d[dense_index(n, i, j, k, l)] = component(i, j, k, l);
                    }
            }
        return d;
    }

    bool is_zero_tensor() const {
        for (const K& v : slots_)
            if (!is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
        return a.space_.n == b.space_.n && a.space_.eps == b.space_.eps && a.slots_ == b.slots_;
    }

    // Checks the three identity families on every index quadruple of a dense
    // array. Violations are data, not exceptions.
    static SymmetryReport validate_dense(const Space& s, const DenseComponents<K>& dense) {
        const int n = s.n;
        if (dense.size() != static_cast<std::size_t>(n) * n * n * n)
            throw usage_error("dense component array has wrong size");
        SymmetryReport rep;
        auto R = [&](int i, int j, int k, int l) -> const K& { return dense[dense_index(n, i, j, k, l)]; };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        K anti = R(i, j, k, l) + R(j, i, k, l);
                        if (!is_zero(anti))
                            rep.violations.push_back({SymmetryViolation::Family::antisymmetry, i, j, k, l,
                                                      act::to_string(anti)});
                        K pair = R(i, j, k, l) - R(k, l, i, j);
                        if (!is_zero(pair))
                            rep.violations.push_back({SymmetryViolation::Family::pair_symmetry, i, j, k, l,
                                                      act::to_string(pair)});
                        K bianchi = R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l);
                        if (!is_zero(bianchi))
                            rep.violations.push_back({SymmetryViolation::Family::bianchi, i, j, k, l,
                                                      act::to_string(bianchi)});
                    }
        return rep;
    }

    SymmetryReport validate_symmetries() const { return validate_dense(space_, dense()); }

  private:
    explicit CurvatureTensor(const Space& s) : space_(s) {
        int m = s.n * (s.n - 1) / 2;
        slots_.assign(static_cast<std::size_t>(m * (m + 1) / 2), K(0));
    }
    Space space_;
    std::vector<K> slots_;
};

// Floating-tolerance symmetry validation for the floating scalar domain;
// the scale is the largest absolute component.
SymmetryReport validate_dense_floating(const Space& s, const std::vector<double>& dense,
                                       const ScalarDomain& domain);

// W = R(X,Y)Z with W^m = eps_m sum_{ijk} x_i y_j z_k R_{ijkm}.
template <class K>
Vec<K> apply(const CurvatureTensor<K>& t, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
    const Space& s = t.space();
    check_dim(s, x, "apply");
    check_dim(s, y, "apply");
    check_dim(s, z, "apply");
    const int n = s.n;
    Vec<K> w(static_cast<std::size_t>(n), K(0));
    for (int i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (i == j || is_zero(y[j])) continue;
            K xy = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                if (is_zero(z[k])) continue;
                K xyz = xy * z[k];
                for (int m = 0; m < n; ++m) {
                    K r = t.component(i, j, k, m);
                    if (is_zero(r)) continue;
                    w[m] = w[m] + xyz * r;
                }
            }
        }
    }
    for (int m = 0; m < n; ++m)
        if (s.eps[m] < 0) w[m] = K(0) - w[m];
    return w;
}

// Jacobi operator R_X: column m equals R(e_m, X) X. Metric-self-adjoint by
// the pair symmetry; R_X(X) = 0 always.
template <class K>
Operator<K> jacobi_operator(const CurvatureTensor<K>& t, const Vec<K>& x) {
    const Space& s = t.space();
    check_dim(s, x, "jacobi_operator");
    const int n = s.n;
    Matrix<K> mat(n, n);
    // entry (l, m) = eps_l sum_{jk} x_j x_k R_{mjkl}
    std::vector<K> pr(static_cast<std::size_t>(n) * n, K(0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) pr[static_cast<std::size_t>(j * n + k)] = x[j] * x[k];
    for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l) {
            K acc = K(0);
            for (int j = 0; j < n; ++j) {
                if (m == j) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == l || is_zero(pr[static_cast<std::size_t>(j * n + k)])) continue;
                    K r = t.component(m, j, k, l);
                    if (is_zero(r)) continue;
                    acc = acc + pr[static_cast<std::size_t>(j * n + k)] * r;
                }
            }
            mat.at(l, m) = s.eps[l] < 0 ? K(K(0) - acc) : acc;
        }
    return Operator<K>(s, std::move(mat));
}

} // namespace act

#endif
