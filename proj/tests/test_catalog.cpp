#include <doctest.h>

#include <algorithm>

#include "act/catalog.hpp"
#include "act/checks.hpp"
#include "act/spectral.hpp"

using namespace act;
using namespace act::catalog;

TEST_CASE("rank-one generator with phi = g reproduces constant curvature k=1") {
    for (auto [p, q] : {std::pair<int, int>{2, 0}, {1, 1}, {2, 1}}) {
        Space s = Space::make(p, q);
        Matrix<Rational> g(s.n, s.n);
        for (int i = 0; i < s.n; ++i) g.at(i, i) = rat(s.eps[static_cast<std::size_t>(i)]);
        CHECK(rank_one_generator(s, g) == constant_curvature(s, rat(1)));
    }
}

TEST_CASE("rank-one generator rejects asymmetric phi and zero phi gives zero") {
    Space s = Space::make(2, 0);
    Matrix<Rational> bad(2, 2);
    bad.at(0, 1) = rat(1);
    CHECK_THROWS_AS(rank_one_generator(s, bad), input_error);
    CHECK(rank_one_generator(s, Matrix<Rational>(2, 2)).is_zero_tensor());
}

TEST_CASE("matrix-rank-one phi gives the zero generator (why the nilpotent family needs rank 2)") {
    // phi = u^b (x) u^b for null u: R_phi vanishes identically
    Space s = Space::make(1, 1);
    Matrix<Rational> phi(2, 2);
    // u = (1,1) null; u^b = (1,-1)
    long ub[2] = {1, -1};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) phi.at(i, j) = rat(ub[i] * ub[j]);
    CHECK(rank_one_generator(s, phi).is_zero_tensor());
}

TEST_CASE("constant curvature k=0 is the zero tensor") {
    Space s = Space::make(2, 2);
    CHECK(constant_curvature(s, rat(0)).is_zero_tensor());
}

TEST_CASE("standard anticommuting families validate") {
    Space s4 = Space::make(4, 0);
    for (int m = 1; m <= 3; ++m) {
        AnticommutingStructure<Rational> cs = standard_anticommuting<Rational>(s4, m);
        cs.validate();  // throws on violation
        CHECK(cs.js.size() == static_cast<std::size_t>(m));
    }
    Space s8 = Space::make(8, 0);
    AnticommutingStructure<Rational> cs8 = standard_anticommuting<Rational>(s8, 3);
    cs8.validate();
    CHECK_THROWS_AS(standard_anticommuting<Rational>(Space::make(3, 0), 1), input_error);
    CHECK_THROWS_AS(standard_anticommuting<Rational>(Space::make(2, 2), 1), input_error);
}

TEST_CASE("clifford tensor: symmetry, eigenvalue pattern oracle, osserman") {
    Space s4 = Space::make(4, 0);
    AnticommutingStructure<Rational> cs = standard_anticommuting<Rational>(s4, 1);

    // m = 0 reduces to constant curvature
    CHECK(clifford_tensor(s4, AnticommutingStructure<Rational>{s4, {}}, rat(2), {}) ==
          constant_curvature(s4, rat(2)));

    CurvatureTensor<Rational> t = clifford_tensor(s4, cs, rat(1), {rat(3)});
    CHECK(t.validate_symmetries().ok());

    // the sign-convention oracle: unit X = e1 gives eigenvalues {0, 10, 1, 1}
    Operator<Rational> a = jacobi_operator(t, basis_vector<Rational>(s4, 0));
    RationalRoots roots = rational_roots(char_poly(a.mat));
    REQUIRE(roots.fully_split);
    std::vector<std::pair<Rational, int>> expected{{rat(0), 1}, {rat(1), 2}, {rat(10), 1}};
    CHECK(roots.roots == expected);

    // osserman acceptance oracle for the construction
    OssermanResult<Rational> oss = is_osserman(t, 32, 2024);
    CHECK(oss.verdict == Verdict::holds_on_samples);

    // two anticommuting structures
    CurvatureTensor<Rational> t2 =
        clifford_tensor(s4, standard_anticommuting<Rational>(s4, 2), rat(1), {rat(1), rat(2)});
    CHECK(t2.validate_symmetries().ok());
    CHECK(is_osserman(t2, 32, 2025).verdict == Verdict::holds_on_samples);
    Operator<Rational> a2 = jacobi_operator(t2, basis_vector<Rational>(s4, 0));
    RationalRoots roots2 = rational_roots(char_poly(a2.mat));
    REQUIRE(roots2.fully_split);
    // {0, lambda0+3*1, lambda0+3*2, lambda0} = {0, 4, 7, 1}
    std::vector<std::pair<Rational, int>> expected2{{rat(0), 1}, {rat(1), 1}, {rat(4), 1}, {rat(7), 1}};
    CHECK(roots2.roots == expected2);
}

TEST_CASE("random_act is reproducible and validator-verified") {
    Space s = Space::make(2, 1);
    CurvatureTensor<Rational> a = random_act<Rational>(s, 777, 3, 5);
    CurvatureTensor<Rational> b = random_act<Rational>(s, 777, 3, 5);
    CHECK(a == b);
    CHECK(a.validate_symmetries().ok());
    CHECK_THROWS_AS(random_act<Rational>(s, 1, 0, 5), usage_error);
}

TEST_CASE("nilpotent example (2,2): R_X nonzero with R_X^2 = 0 at every non-null X") {
    CurvatureTensor<Rational> t = nilpotent_example<Rational>(2, 2);
    Space s = t.space();
    CHECK(t.validate_symmetries().ok());
    CHECK(!t.is_zero_tensor());

    Rng rng(5150);
    for (int trial = 0; trial < 64; ++trial) {
        Vec<Rational> x = sample_vector<Rational>(s, rng, 9, true, Cone::any);
        Operator<Rational> a = jacobi_operator(t, x);
        CHECK(!a.mat.is_zero_matrix());
        CHECK((a.mat * a.mat).is_zero_matrix());
        CHECK(minimal_polynomial(a.mat) == Poly<Rational>(std::vector<Rational>{rat(0), rat(0), rat(1)}));
        CHECK(rank(a.mat) == 1);
    }
    // and it is Osserman (chi = t^4 identically) and Jordan-Osserman
    OssermanResult<Rational> oss = is_osserman(t, 32, 99);
    CHECK(oss.verdict == Verdict::holds_on_samples);
    for (std::size_t j = 0; j + 1 < oss.certificate->a.size(); ++j)
        CHECK(is_zero(oss.certificate->a[j]));
    JordanOssermanResult<Rational> jo = is_jordan_osserman(t, 32, 99);
    CHECK(jo.verdict == Verdict::holds_on_samples);
    CHECK(jo.common_key->blocks == std::vector<std::vector<int>>{{2, 1, 1}});
}

TEST_CASE("nilpotent example rejects impossible signatures with the mathematical reason") {
    CHECK_THROWS_WITH_AS(nilpotent_example<Rational>(1, 1),
                         doctest::Contains("2-dimensional"), input_error);
    CHECK_THROWS_AS(nilpotent_example<Rational>(3, 0), input_error);
}

TEST_CASE("no 2x2 metric-self-adjoint operator annihilating a non-null vector is nilpotent nonzero") {
    // brute-force check of the obstruction over a small grid: any ACT on a
    // 2-space is c * R_g-shaped, so it suffices to scan the one-parameter
    // family of curvature tensors and all small non-null X
    Space s = Space::make(1, 1);
    for (long c = -3; c <= 3; ++c) {
        CurvatureTensor<Rational> t = constant_curvature(s, rat(c));
        for (long x0 = -3; x0 <= 3; ++x0)
            for (long x1 = -3; x1 <= 3; ++x1) {
                Vec<Rational> x{rat(x0), rat(x1)};
                if (is_null(s, x)) continue;
                Operator<Rational> a = jacobi_operator(t, x);
                bool nilpotent_nonzero = !a.mat.is_zero_matrix() && (a.mat * a.mat).is_zero_matrix();
                CHECK(!nilpotent_nonzero);
            }
    }
}
