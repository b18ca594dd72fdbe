#include <doctest.h>

#include "act/charpoly.hpp"
#include "act/matrix.hpp"
#include "act/prng.hpp"

using namespace act;

namespace {
Matrix<Rational> M(int n, std::vector<long> entries) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rat(entries[static_cast<std::size_t>(i * n + j)]);
    return m;
}
Poly<Rational> P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(rat(v));
    return Poly<Rational>(std::move(c));
}
} // namespace

TEST_CASE("matrix basics") {
    Matrix<Rational> a = M(2, {1, 2, 3, 4});
    CHECK(a.trace() == rat(5));
    CHECK((a * Matrix<Rational>::identity(2)) == a);
    CHECK(a.transpose().at(0, 1) == rat(3));
    CHECK(!a.is_symmetric());
    CHECK(M(2, {1, 2, 2, 5}).is_symmetric());
    Vec<Rational> v{rat(1), rat(1)};
    CHECK(a.apply(v) == Vec<Rational>{rat(3), rat(7)});
}

TEST_CASE("rank and nullspace") {
    CHECK(rank(M(3, {1, 2, 3, 2, 4, 6, 0, 0, 1})) == 2);
    CHECK(rank(Matrix<Rational>::identity(4)) == 4);
    CHECK(rank(Matrix<Rational>(3, 3)) == 0);

    auto ns = nullspace_basis(M(3, {1, 2, 3, 2, 4, 6, 0, 0, 1}));
    REQUIRE(ns.size() == 1);
    Matrix<Rational> m = M(3, {1, 2, 3, 2, 4, 6, 0, 0, 1});
    CHECK(is_zero_vec(m.apply(ns[0])));

    // nullspace of A - I for A = diag(1,1,2) is 2-dimensional
    Matrix<Rational> shifted = M(3, {0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(nullspace_basis(shifted).size() == 2);
}

TEST_CASE("characteristic polynomial: Faddeev-LeVerrier") {
    // diag(1,2) -> t^2 - 3t + 2
    CHECK(char_poly(M(2, {1, 0, 0, 2})) == P({2, -3, 1}));
    // nilpotent [[0,1],[0,0]] -> t^2
    CHECK(char_poly(M(2, {0, 1, 0, 0})) == P({0, 0, 1}));
    // f_0 = (-1)^n det A, f_{n-1} = -tr A on a random matrix
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 3));
        Matrix<Rational> a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = rat(rng.uniform_int(-6, 6));
        Poly<Rational> chi = char_poly(a);
        CHECK(chi.degree() == n);
        CHECK(chi.leading() == rat(1));
        CHECK(chi.coeff(n - 1) == -a.trace());
        // Cayley-Hamilton: chi(A) = 0 (independent consequence check)
        CHECK(eval_at_matrix(chi, a).is_zero_matrix());
    }
}

TEST_CASE("char poly of t(t - ks)^{n-1} for the space-form Jacobi shape") {
    // oracle: expand t (t - k s)^3 by polynomial multiplication, n = 4
    Rational k = rat(-2), s = rat(3);
    Poly<Rational> expected = Poly<Rational>::variable() * poly_pow(Poly<Rational>::linear_root(k * s), 3);
    Matrix<Rational> a(4, 4);  // diag(0, ks, ks, ks)
    for (int i = 1; i < 4; ++i) a.at(i, i) = k * s;
    CHECK(char_poly(a) == expected);
    CHECK(expected.coeff(3) == -3 * k * s);
    CHECK(expected.coeff(2) == 3 * k * k * s * s);
    CHECK(expected.coeff(1) == -(k * k * k) * (s * s * s));
    CHECK(expected.coeff(0) == rat(0));
}

TEST_CASE("metric self-adjointness detector") {
    Space s11 = Space::make(1, 1);
    // [[0,-1],[1,0]] has G A = [[0,-1],[-1,0]] symmetric in signature (1,1)
    Operator<Rational> rot(s11, M(2, {0, -1, 1, 0}));
    CHECK(is_metric_self_adjoint(rot));
    Space s20 = Space::make(2, 0);
    Operator<Rational> rot2(s20, M(2, {0, -1, 1, 0}));
    CHECK(!is_metric_self_adjoint(rot2));
}

TEST_CASE("gaussian rational matrices") {
    using GQ = GaussianRational;
    GQ i(rat(0), rat(1));
    Matrix<GQ> a(2, 2);
    a.at(0, 1) = GQ(0) - i;
    a.at(1, 0) = i;
    // char poly of [[0,-i],[i,0]] is t^2 - 1
    Poly<GQ> chi = char_poly(a);
    CHECK(chi == Poly<GQ>(std::vector<GQ>{GQ(-1), GQ(0), GQ(1)}));
    CHECK(rank(a) == 2);
}
