#include <doctest.h>

#include "act/catalog.hpp"
#include "act/curvature.hpp"
#include "act/spectral.hpp"

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

TEST_CASE("eigen_decomposition clusters and residuals") {
    // diag(1,1,2): clusters {1: dim 2, 2: dim 1}
    EigenDecomposition ed = eigen_decomposition(to_complex_dense(M(3, {1, 0, 0, 0, 1, 0, 0, 0, 2})), 1e-9);
    REQUIRE(ed.clusters.size() == 2);
    CHECK(ed.clusters[0].eigenvalue.real() == doctest::Approx(1.0));
    CHECK(ed.clusters[0].algebraic_multiplicity == 2);
    CHECK(ed.clusters[0].eigenvectors.size() == 2);
    CHECK(ed.clusters[1].eigenvalue.real() == doctest::Approx(2.0));
    CHECK(ed.clusters[1].eigenvectors.size() == 1);
    for (auto& c : ed.clusters) CHECK(c.max_residual < 1e-12);

    // [[0,1],[0,0]]: single eigenvalue 0, geometric multiplicity 1
    EigenDecomposition nil = eigen_decomposition(to_complex_dense(M(2, {0, 1, 0, 0})), 1e-9);
    REQUIRE(nil.clusters.size() == 1);
    CHECK(nil.clusters[0].algebraic_multiplicity == 2);
    CHECK(nil.clusters[0].eigenvectors.size() == 1);

    // rotation block: eigenvalues +/- i
    EigenDecomposition rot = eigen_decomposition(to_complex_dense(M(2, {0, -1, 1, 0})), 1e-9);
    REQUIRE(rot.clusters.size() == 2);
    CHECK(rot.clusters[0].eigenvalue.imag() == doctest::Approx(-1.0));
    CHECK(rot.clusters[1].eigenvalue.imag() == doctest::Approx(1.0));

    // zero matrix: one cluster, full eigenspace
    EigenDecomposition z = eigen_decomposition(ComplexDense(3), 1e-9);
    REQUIRE(z.clusters.size() == 1);
    CHECK(z.clusters[0].eigenvectors.size() == 3);
}

TEST_CASE("jordan_structure_numeric on worked examples") {
    JordanStructure a = jordan_structure_numeric(to_complex_dense(M(3, {1, 0, 0, 0, 1, 0, 0, 0, 2})), 1e-9);
    CHECK(a.p() == 2);
    CHECK(structure_signature(a).blocks == std::vector<std::vector<int>>{{1}, {1, 1}});
    CHECK(!a.unreliable);

    JordanStructure b = jordan_structure_numeric(to_complex_dense(M(2, {0, 1, 0, 0})), 1e-9);
    CHECK(b.p() == 1);
    CHECK(b.entries[0].blocks == std::vector<int>{2});

    // J2(3) + J1(3) + J1(5) conjugated by an integer unimodular matrix
    Matrix<Rational> j(4, 4);
    j.at(0, 0) = rat(3);
    j.at(0, 1) = rat(1);
    j.at(1, 1) = rat(3);
    j.at(2, 2) = rat(3);
    j.at(3, 3) = rat(5);
    // conjugate by (I + e_02)(I - e_31)
    Rng rng(10);
    Matrix<Rational> m = j;
    for (int col = 0; col < 4; ++col) m.at(0, col) = m.at(0, col) + m.at(2, col);
    for (int row = 0; row < 4; ++row) m.at(row, 2) = m.at(row, 2) - m.at(row, 0);
    JordanStructure c = jordan_structure_numeric(to_complex_dense(m), 1e-8);
    CHECK(c.p() == 2);
    CHECK(structure_signature(c).blocks == std::vector<std::vector<int>>{{1}, {2, 1}});
    // cross-path agreement
    CHECK(structure_signature(c) == structure_signature(jordan_structure_exact(m)));
}

TEST_CASE("minimal polynomial") {
    CHECK(minimal_polynomial(Matrix<Rational>::identity(3)) == P({-1, 1}));
    CHECK(minimal_polynomial(M(2, {1, 0, 0, 2})) == P({-1, 1}) * P({-2, 1}));
    // J2(0) + J1(0): m = t^2, substitution verified inside
    Matrix<Rational> n(3, 3);
    n.at(0, 1) = rat(1);
    CHECK(minimal_polynomial(n) == P({0, 0, 1}));
    CHECK(divides(minimal_polynomial(n), char_poly(n)));
}

TEST_CASE("is_diagonalisable honors the scalar field") {
    Space s20 = Space::make(2, 0);
    Space s11 = Space::make(1, 1);
    Space s20c = Space::make(2, 0, Field::complex);

    // diag(1,2,2) over R: true
    Space s30 = Space::make(3, 0);
    CHECK(is_diagonalisable(Operator<Rational>(s30, M(3, {1, 0, 0, 0, 2, 0, 0, 0, 2}))));
    // nilpotent: false (m = t^2 not squarefree)
    CHECK(!is_diagonalisable(Operator<Rational>(s20, M(2, {0, 1, 0, 0}))));
    // rotation block over R: false (no real roots); over C: true
    CHECK(!is_diagonalisable(Operator<Rational>(s20, M(2, {0, -1, 1, 0}))));
    using GQ = GaussianRational;
    Matrix<GQ> rot(2, 2);
    rot.at(0, 1) = GQ(-1);
    rot.at(1, 0) = GQ(1);
    CHECK(is_diagonalisable(Operator<GQ>(s20c, rot)));
    (void)s11;
}

TEST_CASE("numeric and exact jordan paths agree on random well-separated matrices") {
    Rng rng(909);
    int agreements = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 3));
        Matrix<Rational> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rat(rng.uniform_int(-5, 5));
        JordanStructure numeric = jordan_structure_numeric(to_complex_dense(m), 1e-8);
        if (numeric.unreliable) continue;  // marginal rank decisions excluded by contract
        // well-separated check: all pairwise eigenvalue gaps above 1e-3
        bool separated = true;
        for (std::size_t a = 0; a < numeric.entries.size(); ++a)
            for (std::size_t b = a + 1; b < numeric.entries.size(); ++b)
                if (std::abs(numeric.entries[a].eigenvalue - numeric.entries[b].eigenvalue) < 1e-3)
                    separated = false;
        if (!separated) continue;
        CHECK(structure_signature(numeric) == structure_signature(jordan_structure_exact(m)));
        ++agreements;
    }
    CHECK(agreements > 10);  // the comparison actually exercised
}

TEST_CASE("jacobi operator of the rotation-generating tensor in (1,1)") {
    // metric-self-adjoint non-symmetric matrices appear for indefinite
    // signatures; eigen machinery must handle them
    Space s11 = Space::make(1, 1);
    Matrix<Rational> a = M(2, {0, -1, 1, 0});
    Operator<Rational> op(s11, a);
    REQUIRE(is_metric_self_adjoint(op));
    EigenDecomposition ed = eigen_decomposition(op, 1e-9);
    REQUIRE(ed.clusters.size() == 2);
    CHECK(std::abs(ed.clusters[0].eigenvalue.imag()) == doctest::Approx(1.0));
    CHECK(!is_diagonalisable(op));  // over R
}
