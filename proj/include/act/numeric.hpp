#ifndef ACT_NUMERIC_HPP
#define ACT_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "act/curvature.hpp"
#include "act/spectral.hpp"

namespace act {

using CVec = std::vector<std::complex<double>>;

template <class K>
CVec to_cvec(const Vec<K>& v) {
    CVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_complex(v[i]);
    return r;
}

// Bilinear (not Hermitian) form sum eps_i x_i y_i; the metric pairing.
inline std::complex<double> inner_bilinear(const std::vector<int>& eps, const CVec& x, const CVec& y) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += static_cast<double>(eps[i]) * x[i] * y[i];
    return acc;
}

inline double euclidean_norm(const CVec& x) {
    double s = 0.0;
    for (auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

inline CVec cvec_sub(const CVec& a, const CVec& b) {
    CVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline CVec cvec_scale(std::complex<double> c, const CVec& a) {
    CVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline CVec cvec_axpy(const CVec& a, std::complex<double> c, const CVec& b) {
    CVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
    return r;
}

inline CVec mat_apply(const ComplexDense& m, const CVec& v) {
    CVec r(static_cast<std::size_t>(m.n), 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

// Double-precision copy of a curvature tensor for the floating paths.
struct NumericTensor {
    int n = 0;
    std::vector<int> eps;
    std::vector<std::complex<double>> dense;  // R_{ijkl}, dense_index layout

    const std::complex<double>& at(int i, int j, int k, int l) const {
        return dense[dense_index(n, i, j, k, l)];
    }
};

template <class K>
NumericTensor to_numeric(const CurvatureTensor<K>& t) {
    NumericTensor nt;
    nt.n = t.space().n;
    nt.eps = t.space().eps;
    DenseComponents<K> d = t.dense();
    nt.dense.resize(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) nt.dense[i] = to_complex(d[i]);
    return nt;
}

// Numeric Jacobi operator: entry (l, m) = eps_l sum_{jk} x_j x_k R_{mjkl}.
inline ComplexDense jacobi_numeric(const NumericTensor& t, const CVec& x) {
    const int n = t.n;
    ComplexDense mat(n);
    for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == m) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == l) continue;
                    acc += x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k)] * t.at(m, j, k, l);
                }
            }
            mat.at(l, m) = static_cast<double>(t.eps[static_cast<std::size_t>(l)]) * acc;
        }
    return mat;
}

} // namespace act

#endif
