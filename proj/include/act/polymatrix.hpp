#ifndef ACT_POLYMATRIX_HPP
#define ACT_POLYMATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "act/charpoly.hpp"
#include "act/curvature.hpp"
#include "act/jordan.hpp"
#include "act/matrix.hpp"
#include "act/polynomial.hpp"
#include "act/prng.hpp"

namespace act {

// ---- Smith normal form of tI - A over K[t] ---------------------------------

namespace detail {

template <class K>
using PolyMat = std::vector<std::vector<Poly<K>>>;

template <class K>
PolyMat<K> characteristic_matrix(const Matrix<K>& a) {
    const int n = a.rows();
    PolyMat<K> m(static_cast<std::size_t>(n), std::vector<Poly<K>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<K> c{K(0) - a.at(i, j)};
            if (i == j) c.push_back(K(1));
            m[i][j] = Poly<K>(std::move(c));
        }
    return m;
}

// Diagonalize by unimodular row/column operations over the Euclidean domain
// K[t]; returns the monic diagonal d_1 | d_2 | ... | d_n.
template <class K>
std::vector<Poly<K>> smith_diagonal(PolyMat<K> m) {
    const int n = static_cast<int>(m.size());
    auto deg = [](const Poly<K>& f) { return f.degree(); };
    for (int s = 0; s < n; ++s) {
        for (;;) {
            // locate a nonzero entry of minimal degree in the trailing block
            int bi = -1, bj = -1;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j) {
                    if (m[i][j].is_zero_poly()) continue;
                    if (bi < 0 || deg(m[i][j]) < deg(m[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) break;  // trailing block is zero
            std::swap(m[bi], m[static_cast<std::size_t>(s)]);
            for (int i = s; i < n; ++i) std::swap(m[i][static_cast<std::size_t>(bj)], m[i][static_cast<std::size_t>(s)]);

            bool reduced = true;
            for (int i = s + 1; i < n; ++i) {
                if (m[i][s].is_zero_poly()) continue;
                auto [q, r] = divmod(m[i][s], m[s][s]);
                for (int j = s; j < n; ++j) m[i][j] = m[i][j] - q * m[s][j];
                if (!m[i][s].is_zero_poly()) reduced = false;  // degree dropped; repeat
            }
            if (!reduced) continue;
            for (int j = s + 1; j < n; ++j) {
                if (m[s][j].is_zero_poly()) continue;
                auto [q, r] = divmod(m[s][j], m[s][s]);
                for (int i = s; i < n; ++i) m[i][j] = m[i][j] - q * m[i][s];
                if (!m[s][j].is_zero_poly()) reduced = false;
            }
            if (!reduced) continue;

            // pivot divides the rest of the block, or fold an offending row in
            bool divides_all = true;
            for (int i = s + 1; i < n && divides_all; ++i)
                for (int j = s + 1; j < n && divides_all; ++j) {
                    if (divides(m[s][s], m[i][j])) continue;
                    for (int jj = s; jj < n; ++jj) m[s][jj] = m[s][jj] + m[i][jj];
                    divides_all = false;
                }
            if (divides_all) break;
        }
    }
    std::vector<Poly<K>> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        d.push_back(m[s][s].is_zero_poly() ? Poly<K>() : m[s][s].monic());
    return d;
}

} // namespace detail

// Invariant factors of tI - A in increasing divisibility order, all monic;
// their product is the characteristic polynomial. Computed by elimination to
// Smith form over K[t] rather than by minor GCDs; the minor-GCD route is kept
// below as a small-n oracle.
template <class K>
std::vector<Poly<K>> invariant_factors(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw usage_error("invariant_factors: matrix must be square");
    std::vector<Poly<K>> d = detail::smith_diagonal(detail::characteristic_matrix(a));
    // tI - A is nonsingular over K(t), so no diagonal entry may vanish.
    Poly<K> product = Poly<K>::constant(K(1));
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].is_zero_poly()) throw internal_error("invariant_factors: singular characteristic matrix");
        if (k + 1 < d.size() && !divides(d[k], d[k + 1]))
            throw internal_error("invariant_factors: divisibility chain broken");
        product = product * d[k];
    }
    if (product != char_poly(a)) throw internal_error("invariant_factors: product != characteristic polynomial");
    return d;
}

// Determinantal divisors D_k = gcd of all k x k minors of tI - A, the
// definition the invariant factors are quotients of. Exponential in n; this
// is the n <= 5 test oracle, not a production path.
template <class K>
std::vector<Poly<K>> determinantal_divisors_minor_gcd(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw usage_error("determinantal divisors: matrix must be square");
    const int n = a.rows();
    if (n > 5) throw usage_error("minor-GCD oracle is limited to n <= 5");
    detail::PolyMat<K> m = detail::characteristic_matrix(a);

    // polynomial determinant by cofactor expansion (k <= 5)
    auto det = [&](auto&& self, const std::vector<int>& rows, const std::vector<int>& cols) -> Poly<K> {
        if (rows.size() == 1) return m[rows[0]][cols[0]];
        Poly<K> acc;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (m[rows[0]][cols[c]].is_zero_poly()) continue;
            std::vector<int> sub_cols;
            for (std::size_t cc = 0; cc < cols.size(); ++cc)
                if (cc != c) sub_cols.push_back(cols[cc]);
            Poly<K> term = m[rows[0]][cols[c]] * self(self, sub_rows, sub_cols);
            acc = (c % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    std::vector<Poly<K>> divisors;
    for (int k = 1; k <= n; ++k) {
        // iterate over k-subsets of rows and columns
        std::vector<int> rs(static_cast<std::size_t>(k));
        std::vector<int> cs(static_cast<std::size_t>(k));
        Poly<K> g;
        auto next_subset = [n, k](std::vector<int>& v) {
            int i = k - 1;
            while (i >= 0 && v[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) return false;
            ++v[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        };
        for (int i = 0; i < k; ++i) rs[static_cast<std::size_t>(i)] = i;
        do {
            for (int i = 0; i < k; ++i) cs[static_cast<std::size_t>(i)] = i;
            do {
                Poly<K> minor = det(det, rs, cs);
                if (minor.is_zero_poly()) continue;
                g = g.is_zero_poly() ? minor.monic() : poly_gcd(g, minor);
                if (g.is_one()) break;
            } while (next_subset(cs));
            if (g.is_one()) break;
        } while (next_subset(rs));
        if (g.is_zero_poly()) throw internal_error("determinantal divisor vanished");
        divisors.push_back(g);
    }
    return divisors;
}

// Invariant factors from determinantal divisors: i_k = D_k / D_{k-1}.
template <class K>
std::vector<Poly<K>> invariant_factors_minor_gcd(const Matrix<K>& a) {
    std::vector<Poly<K>> d = determinantal_divisors_minor_gcd(a);
    std::vector<Poly<K>> inv;
    inv.reserve(d.size());
    Poly<K> prev = Poly<K>::constant(K(1));
    for (const Poly<K>& dk : d) {
        inv.push_back(exact_div(dk, prev).monic());
        prev = dk;
    }
    return inv;
}

// ---- Elementary divisor pattern and exact Jordan structure -----------------

// One squarefree factor together with the Jordan block size it contributes:
// over C, S carries deg(S) distinct eigenvalues, one block of size e each.
template <class K>
struct ElementaryDivisorTerm {
    int invariant_index;  // which invariant factor (0-based) the term came from
    Poly<K> squarefree_factor;
    int multiplicity;  // block size e
};

template <class K>
std::vector<ElementaryDivisorTerm<K>> elementary_divisor_pattern(const std::vector<Poly<K>>& inv) {
    std::vector<ElementaryDivisorTerm<K>> terms;
    for (std::size_t k = 0; k < inv.size(); ++k) {
        if (inv[k].is_zero_poly() || inv[k].leading() != K(1))
            throw input_error("invariant factors must be monic and nonzero");
        if (k > 0 && !divides(inv[k - 1], inv[k]))
            throw input_error("invariant factor divisibility chain violated");
        for (auto& [part, e] : squarefree_decomposition(inv[k]))
            terms.push_back({static_cast<int>(k), part, e});
    }
    return terms;
}

namespace detail {

// Pairwise-coprime refinement (gcd-free basis) of a set of squarefree monic
// polynomials: every input is a product of basis elements, and distinct basis
// elements share no roots. This separates eigenvalues exactly without ever
// factoring into irreducibles.
template <class K>
std::vector<Poly<K>> gcd_free_basis(std::vector<Poly<K>> input) {
    std::vector<Poly<K>> basis;
    while (!input.empty()) {
        Poly<K> f = input.back().monic();
        input.pop_back();
        if (f.is_constant()) continue;
        for (std::size_t b = 0; b < basis.size() && f.degree() > 0; ++b) {
            Poly<K> g = poly_gcd(f, basis[b]);
            if (g.degree() == 0) continue;
            Poly<K> rest = exact_div(basis[b], g);
            basis[b] = g;
            if (rest.degree() > 0) input.push_back(rest);
            f = exact_div(f, g);
        }
        if (f.degree() > 0) basis.push_back(f);
    }
    return basis;
}

} // namespace detail

// Jordan structure over C from the invariant factors: the roots of each
// squarefree part of each invariant factor contribute one block of that
// part's multiplicity. Roots are separated with exact gcd arithmetic only
// (no factorization into irreducibles); eigenvalues stay symbolic as
// (coprime factor, root index), with numeric values attached for display.
template <class K>
JordanStructure jordan_structure_exact_from_invariants(const std::vector<Poly<K>>& inv) {
    std::vector<ElementaryDivisorTerm<K>> terms = elementary_divisor_pattern(inv);
    std::vector<Poly<K>> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) parts.push_back(t.squarefree_factor);
    std::vector<Poly<K>> basis = detail::gcd_free_basis(parts);
    std::sort(basis.begin(), basis.end(), [](const Poly<K>& x, const Poly<K>& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return to_string(x) < to_string(y);
    });

    JordanStructure js;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        std::vector<int> blocks;
        for (const auto& t : terms)
            if (divides(basis[b], t.squarefree_factor)) blocks.push_back(t.multiplicity);
        std::sort(blocks.begin(), blocks.end(), std::greater<int>());
        js.factor_exprs.push_back(to_string(basis[b]));
        std::vector<std::complex<double>> roots = numeric_roots(basis[b]);
        for (int r = 0; r < basis[b].degree(); ++r) {
            JordanStructure::Entry e;
            e.factor_id = static_cast<int>(b);
            e.root_index = r;
            e.eigenvalue = r < static_cast<int>(roots.size()) ? roots[static_cast<std::size_t>(r)]
                                                              : std::complex<double>(0, 0);
            e.blocks = blocks;
            js.entries.push_back(std::move(e));
        }
    }
    return js;
}

template <class K>
JordanStructure jordan_structure_exact(const Matrix<K>& a) {
    return jordan_structure_exact_from_invariants(invariant_factors(a));
}

template <class K>
JordanStructure jordan_structure_exact(const Operator<K>& a) {
    return jordan_structure_exact(a.mat);
}

// ---- Genericity ------------------------------------------------------------

template <class K>
struct GenericityResult {
    bool generic_evidence = false;
    StructureKey key_at_x;
    int samples_checked = 0;
    // present iff a perturbation changed the Jordan type (a certain disproof
    // of structure constancy at this radius)
    std::optional<Vec<K>> witness_point;
    std::optional<StructureKey> witness_key;
};

// Samples `count` rational perturbations X + delta with |delta_i| <= radius
// (denominator 1000) and compares Jordan-type keys of the Jacobi operators.
template <class K>
GenericityResult<K> classify_generic(const CurvatureTensor<K>& t, const Vec<K>& x, int count,
                                     const Rational& radius, Rng rng) {
    GenericityResult<K> res;
    res.key_at_x = structure_signature(jordan_structure_exact(jacobi_operator(t, x).mat));
    Rational num_bound_q = radius * 1000;
    long num_bound = static_cast<long>(num_bound_q.get_d());
    if (num_bound < 1) num_bound = 1;
    const int n = t.space().n;
    for (int s = 0; s < count; ++s) {
        Vec<K> y = x;
        for (int i = 0; i < n; ++i) {
            Rational delta = rat(rng.uniform_int(-num_bound, num_bound), 1000);
            y[i] = y[i] + K(delta);
        }
        StructureKey key = structure_signature(jordan_structure_exact(jacobi_operator(t, y).mat));
        res.samples_checked = s + 1;
        if (!(key == res.key_at_x)) {
            res.witness_point = y;
            res.witness_key = key;
            return res;
        }
    }
    res.generic_evidence = true;
    return res;
}

} // namespace act

#endif
