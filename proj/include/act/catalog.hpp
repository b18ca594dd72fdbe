#ifndef ACT_CATALOG_HPP
#define ACT_CATALOG_HPP

#include <string>
#include <vector>

#include "act/curvature.hpp"
#include "act/matrix.hpp"
#include "act/prng.hpp"
#include "act/space.hpp"

namespace act::catalog {

// R_{ijkl} = k (g_{jk} g_{il} - g_{ik} g_{jl}); Jacobi operator
// R_X Y = k (||X||^2 Y - <X,Y> X).
template <class K>
CurvatureTensor<K> constant_curvature(const Space& s, const K& k) {
    auto g = [&s](int a, int b) -> int { return a == b ? s.eps[static_cast<std::size_t>(a)] : 0; };
    return CurvatureTensor<K>::from_formula(s, [&, k](int i, int j, int kk, int l) -> K {
        long v = static_cast<long>(g(j, kk)) * g(i, l) - static_cast<long>(g(i, kk)) * g(j, l);
        return k * K(v);
    });
}

// Generator R_phi(X,Y)Z = phi(Y,Z) Phi X - phi(X,Z) Phi Y for a symmetric
// bilinear form phi (Phi its metric raise); componentwise
// R_{ijkl} = phi_{jk} phi_{il} - phi_{ik} phi_{jl}. These span the space of
// algebraic curvature tensors, which is what makes random sums of them a
// usable exploration family.
template <class K>
CurvatureTensor<K> rank_one_generator(const Space& s, const Matrix<K>& phi) {
    if (phi.rows() != s.n || phi.cols() != s.n) throw usage_error("rank_one_generator: phi must be n x n");
    if (!phi.is_symmetric()) throw input_error("rank_one_generator: phi must be symmetric");
    return CurvatureTensor<K>::from_formula(s, [&](int i, int j, int k, int l) -> K {
        return phi.at(j, k) * phi.at(i, l) - phi.at(i, k) * phi.at(j, l);
    });
}

// Anticommuting family of metric-skew complex structures.
template <class K>
struct AnticommutingStructure {
    Space space;
    std::vector<Matrix<K>> js;

    void validate() const {
        const int n = space.n;
        for (std::size_t a = 0; a < js.size(); ++a) {
            const Matrix<K>& j = js[a];
            if (j.rows() != n || j.cols() != n)
                throw input_error("anticommuting structure: operator dimension mismatch");
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    // (G J)_{rc} + (G J)_{cr} must vanish
                    K lhs = space.eps[static_cast<std::size_t>(r)] < 0 ? K(K(0) - j.at(r, c)) : j.at(r, c);
                    K rhs = space.eps[static_cast<std::size_t>(c)] < 0 ? K(K(0) - j.at(c, r)) : j.at(c, r);
                    if (!is_zero(K(lhs + rhs)))
                        throw input_error("anticommuting structure: G*J not antisymmetric");
                }
            Matrix<K> sq = j * j;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    K want = r == c ? K(-1) : K(0);
                    if (sq.at(r, c) != want) throw input_error("anticommuting structure: J^2 != -I");
                }
            for (std::size_t b = a + 1; b < js.size(); ++b) {
                Matrix<K> anti = js[a] * js[b] + js[b] * js[a];
                if (!anti.is_zero_matrix()) throw input_error("anticommuting structure: J_i J_j + J_j J_i != 0");
            }
        }
    }
};

// psi_{ab} = <J e_a, e_b>.
template <class K>
Matrix<K> structure_form(const Space& s, const Matrix<K>& j) {
    Matrix<K> psi(s.n, s.n);
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            psi.at(a, b) = s.eps[static_cast<std::size_t>(b)] < 0 ? K(K(0) - j.at(b, a)) : j.at(b, a);
    return psi;
}

// R = lambda0 R_g + sum_i lambda_i R^{J_i} with the structure generator
// normalized as R^{J}_{ijkl} = psi_{jk} psi_{il} - psi_{ik} psi_{jl}
// - 2 psi_{ij} psi_{kl}, which gives the Jacobi operator
// R_X Y = lambda0 (||X||^2 Y - <X,Y> X) + 3 sum_i lambda_i <Y, J_i X> J_i X
// and the unit-vector eigenvalue pattern {0, lambda0 + 3 lambda_i, lambda0}.
template <class K>
CurvatureTensor<K> clifford_tensor(const Space& s, const AnticommutingStructure<K>& cs, const K& lambda0,
                                   const std::vector<K>& lambdas) {
    if (lambdas.size() != cs.js.size())
        throw usage_error("clifford_tensor: one coefficient per structure operator required");
    cs.validate();
    std::vector<Matrix<K>> psis;
    psis.reserve(cs.js.size());
    for (const auto& j : cs.js) psis.push_back(structure_form(s, j));
    auto g = [&s](int a, int b) -> long { return a == b ? s.eps[static_cast<std::size_t>(a)] : 0; };
    return CurvatureTensor<K>::from_formula(s, [&](int i, int j, int k, int l) -> K {
        K acc = lambda0 * K(g(j, k) * g(i, l) - g(i, k) * g(j, l));
        for (std::size_t m = 0; m < psis.size(); ++m) {
            const Matrix<K>& psi = psis[m];
            K term = psi.at(j, k) * psi.at(i, l) - psi.at(i, k) * psi.at(j, l) -
                     K(2) * psi.at(i, j) * psi.at(k, l);
            acc = acc + lambdas[m] * term;
        }
        return acc;
    });
}

// Standard quaternionic triples: n = 4 directly, n = 8 as two diagonal
// blocks. Euclidean metric only (the shipped operators are skew against a
// definite metric).
template <class K>
AnticommutingStructure<K> standard_anticommuting(const Space& s, int count) {
    if (s.q != 0) throw input_error("standard anticommuting families ship for Euclidean signatures");
    if (s.n != 4 && s.n != 8) throw input_error("standard anticommuting families ship for n = 4 and n = 8");
    if (count < 1 || count > 3) throw input_error("standard anticommuting families provide 1..3 operators");
    static const int j1[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    static const int j2[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    static const int j3[4][4] = {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    const int(*blocks[3])[4] = {j1, j2, j3};
    AnticommutingStructure<K> cs;
    cs.space = s;
    for (int m = 0; m < count; ++m) {
        Matrix<K> j(s.n, s.n);
        for (int block = 0; block < s.n / 4; ++block)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) j.at(4 * block + r, 4 * block + c) = K(blocks[m][r][c]);
        cs.js.push_back(std::move(j));
    }
    cs.validate();
    return cs;
}

template <class K>
Matrix<K> random_symmetric_form(const Space& s, Rng& rng, long bound) {
    Matrix<K> phi(s.n, s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = i; j < s.n; ++j) {
            K v = K(rng.uniform_int(-bound, bound));
            phi.at(i, j) = v;
            phi.at(j, i) = v;
        }
    return phi;
}

// Sum of `generator_count` rank-one generators with random integer symmetric
// forms; deterministic in the seed.
template <class K>
CurvatureTensor<K> random_act(const Space& s, std::uint64_t seed, int generator_count, long bound) {
    if (generator_count < 1) throw usage_error("random_act: generator_count must be >= 1");
    if (bound < 1) throw usage_error("random_act: coefficient bound must be >= 1");
    Rng rng(seed);
    DenseComponents<K> acc(static_cast<std::size_t>(s.n) * s.n * s.n * s.n, K(0));
    for (int g = 0; g < generator_count; ++g) {
        Matrix<K> phi = random_symmetric_form<K>(s, rng, bound);
        CurvatureTensor<K> part = rank_one_generator(s, phi);
        DenseComponents<K> d = part.dense();
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + d[i];
    }
    return CurvatureTensor<K>::from_dense(s, acc);
}

// Neutral-signature tensor with nilpotent nonzero Jacobi operators at every
// non-null X: R = R_phi with phi = u^b (x) u^b + v^b (x) v^b for the null,
// mutually orthogonal pair u = (1,0,1,0), v = (0,1,0,1) in signature (2,2).
// The raised operator Phi then satisfies Phi^2 = 0, which forces
// (R_X)^2 = 0, while R_X has rank one (minimal polynomial t^2) whenever
// ||X||^2 != 0. A single rank-one form u^b (x) u^b does not work: the
// generator R_phi vanishes identically for any phi of rank one.
//
// No 2-dimensional instance can exist at all: a metric-self-adjoint operator
// on a 2-space that kills a non-null X is diagonal in the basis {X, X^perp},
// so it cannot be nilpotent without being zero. nilpotent_example therefore
// rejects signature (1,1).
template <class K>
CurvatureTensor<K> nilpotent_example(int p, int q) {
    if (p == 1 && q == 1)
        throw input_error(
            "nilpotent_example: no algebraic curvature tensor on a 2-dimensional space has a "
            "nonzero nilpotent Jacobi operator at a non-null vector (a self-adjoint operator "
            "annihilating a non-null X is diagonalisable there); use signature (2,2)");
    if (p != 2 || q != 2) throw input_error("nilpotent_example ships for signature (2,2)");
    Space s = Space::make(2, 2);
    Matrix<K> phi(4, 4);
    const int ub[4] = {1, 0, -1, 0};  // (G u) for u = (1,0,1,0)
    const int vb[4] = {0, 1, 0, -1};  // (G v) for v = (0,1,0,1)
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) phi.at(i, j) = K(ub[i] * ub[j] + vb[i] * vb[j]);
    return rank_one_generator(s, phi);
}

} // namespace act::catalog

#endif
