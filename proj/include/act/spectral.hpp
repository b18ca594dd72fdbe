#ifndef ACT_SPECTRAL_HPP
#define ACT_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "act/jordan.hpp"
#include "act/matrix.hpp"
#include "act/polymatrix.hpp"
#include "act/polynomial.hpp"

namespace act {

// Minimal dense complex matrix for the floating paths (keeps the linear
// algebra backend out of the public headers).
struct ComplexDense {
    int n = 0;
    std::vector<std::complex<double>> a;

    ComplexDense() = default;
    explicit ComplexDense(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    const std::complex<double>& at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

template <class K>
ComplexDense to_complex_dense(const Matrix<K>& m) {
    ComplexDense c(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c.at(i, j) = to_complex(m.at(i, j));
    return c;
}

double max_row_sum_norm(const ComplexDense& m);

struct EigenPair {
    std::complex<double> eigenvalue;
    std::vector<std::complex<double>> eigenvector;  // Euclidean-normalized
    double residual;                                // ||A v - lambda v|| / (||A|| ||v||)
};

struct EigenCluster {
    std::complex<double> eigenvalue;  // cluster representative (mean)
    int algebraic_multiplicity = 0;
    std::vector<std::vector<std::complex<double>>> eigenvectors;  // span the cluster eigenspace
    double max_residual = 0.0;
};

struct EigenDecomposition {
    std::vector<EigenCluster> clusters;
    double op_norm = 0.0;

    std::vector<EigenPair> pairs() const {
        std::vector<EigenPair> out;
        for (const auto& c : clusters)
            for (const auto& v : c.eigenvectors) out.push_back({c.eigenvalue, v, c.max_residual});
        return out;
    }
};

// Eigenvalues/eigenvectors over C with relative clustering at tol*||A||.
// Cluster eigenvectors span the geometric eigenspace (SVD nullspace of
// A - lambda I), so defective clusters report fewer vectors than their
// algebraic multiplicity.
EigenDecomposition eigen_decomposition(const ComplexDense& m, double tol);

template <class K>
EigenDecomposition eigen_decomposition(const Operator<K>& a, double tol) {
    return eigen_decomposition(to_complex_dense(a.mat), tol);
}

// Jordan structure from numeric ranks: for each clustered eigenvalue the
// number of blocks of size >= k is rank((A - lambda I)^{k-1}) -
// rank((A - lambda I)^k), ranks decided by singular-value thresholding at
// tol*||A||^k. Marginal rank decisions set the `unreliable` flag.
JordanStructure jordan_structure_numeric(const ComplexDense& m, double tol);

template <class K>
JordanStructure jordan_structure_numeric(const Operator<K>& a, double tol) {
    return jordan_structure_numeric(to_complex_dense(a.mat), tol);
}

// Monic least-degree polynomial with m(A) = 0; this is the top invariant
// factor, and the result is verified by exact substitution.
template <class K>
Poly<K> minimal_polynomial(const Matrix<K>& a) {
    Poly<K> m = invariant_factors(a).back();
    if (!eval_at_matrix(m, a).is_zero_matrix())
        throw internal_error("minimal_polynomial: substitution m(A) != 0");
    return m;
}

template <class K>
Poly<K> minimal_polynomial(const Operator<K>& a) {
    return minimal_polynomial(a.mat);
}

// Diagonalisable over C iff the minimal polynomial is squarefree; over R
// additionally every root must be real (Sturm distinct-real-root count equals
// the degree). The scalar field of the operator's space decides which test
// applies.
template <class K>
bool is_diagonalisable(const Operator<K>& a) {
    Poly<K> m = minimal_polynomial(a.mat);
    Poly<K> g = poly_gcd(m, m.derivative());
    if (g.degree() > 0) return false;
    if constexpr (std::is_same_v<K, Rational>) {
        if (a.space.field == Field::real) return real_root_count(m) == m.degree();
        return true;
    } else {
        return true;  // complex scalars: squarefree suffices
    }
}

} // namespace act

#endif
