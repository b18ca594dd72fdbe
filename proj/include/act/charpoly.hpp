#ifndef ACT_CHARPOLY_HPP
#define ACT_CHARPOLY_HPP

#include "act/matrix.hpp"
#include "act/polynomial.hpp"

namespace act {

// Characteristic polynomial det(tI - A), monic, by the Faddeev-LeVerrier
// recurrence. The only divisions are by the integers 1..n, so the computation
// is exact over any field of characteristic zero.
template <class K>
Poly<K> char_poly(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw usage_error("char_poly: matrix must be square");
    const int n = a.rows();
    std::vector<K> c(static_cast<std::size_t>(n + 1), K(0));
    c[static_cast<std::size_t>(n)] = K(1);
    Matrix<K> m = Matrix<K>(n, n);  // M_0 = 0
    K prev_c = K(1);                // c_n
    for (int k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{n-k+1} I)
        Matrix<K> shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + prev_c;
        m = a * shifted;
        K ck = (K(0) - m.trace()) / K(static_cast<long>(k));
        c[static_cast<std::size_t>(n - k)] = ck;
        prev_c = ck;
    }
    return Poly<K>(std::move(c));
}

// Evaluate a polynomial at a square matrix (Horner).
template <class K>
Matrix<K> eval_at_matrix(const Poly<K>& f, const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw usage_error("eval_at_matrix: matrix must be square");
    const int n = a.rows();
    Matrix<K> acc(n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = a * acc;
        K ci = f.coeff(i);
        if (!is_zero(ci))
            for (int d = 0; d < n; ++d) acc.at(d, d) = acc.at(d, d) + ci;
    }
    return acc;
}

} // namespace act

#endif
