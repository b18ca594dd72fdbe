#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "act/polynomial.hpp"

namespace act {

namespace {

template <class K>
std::vector<std::complex<double>> companion_roots(const Poly<K>& f) {
    Poly<K> p = f.monic();
    const int n = p.degree();
    if (n <= 0) return {};
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, n - 1) = -to_complex(p.coeff(i));
        if (i + 1 < n) c(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw internal_error("companion eigenvalue solver failed");
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace

std::vector<std::complex<double>> numeric_roots(const Poly<Rational>& f) { return companion_roots(f); }
std::vector<std::complex<double>> numeric_roots(const Poly<GaussianRational>& f) { return companion_roots(f); }

int real_root_count(const Poly<Rational>& f) {
    if (f.is_zero_poly()) throw input_error("real_root_count: zero polynomial");
    if (f.degree() == 0) return 0;
    Poly<Rational> p = squarefree_part(f);
    if (p.degree() == 0) return 0;

    std::vector<Poly<Rational>> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        Poly<Rational> r = poly_mod(chain[chain.size() - 2], chain.back());
        if (r.is_zero_poly()) break;
        chain.push_back(-r);
    }
    // Sign-change counts at -inf / +inf from leading coefficients.
    auto changes_at_infinity = [&chain](bool positive) {
        int changes = 0, last = 0;
        for (const auto& q : chain) {
            if (q.is_zero_poly()) continue;
            int sg = sgn(q.leading());
            if (!positive && q.degree() % 2 == 1) sg = -sg;
            if (last != 0 && sg != last) ++changes;
            last = sg;
        }
        return changes;
    };
    return changes_at_infinity(false) - changes_at_infinity(true);
}

RationalRoots rational_roots(const Poly<Rational>& f) {
    if (f.is_zero_poly()) throw input_error("rational_roots: zero polynomial");
    RationalRoots out;
    Poly<Rational> work = f.monic();
    if (work.degree() == 0) {
        out.fully_split = true;
        return out;
    }

    // Numeric candidates, rationalized by continued fractions and verified
    // exactly; a wrong candidate costs nothing and a missed one only demotes
    // the caller to the floating path.
    std::vector<Rational> candidates;
    auto push_candidate = [&candidates](const Rational& r) {
        for (const Rational& c : candidates)
            if (c == r) return;
        candidates.push_back(r);
    };
    for (const std::complex<double>& z : numeric_roots(squarefree_part(work))) {
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
        double x = z.real();
        if (std::abs(x) < 9e15) push_candidate(rat(static_cast<long>(std::llround(x))));
        double rem = x;
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        for (int step = 0; step < 48; ++step) {
            double fl = std::floor(rem);
            if (std::abs(fl) > 9e15) break;
            long long a = static_cast<long long>(fl);
            long long p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 == 0 || std::llabs(q2) > 1000000000000LL || std::llabs(p2) > 4000000000000000000LL) break;
            push_candidate(rat(static_cast<long>(p2), static_cast<long>(q2)));
            double frac = rem - fl;
            if (frac < 1e-14) break;
            rem = 1.0 / frac;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
        }
    }

    for (const Rational& r : candidates) {
        int mult = 0;
        while (work.degree() > 0 && is_zero(work(r))) {
            work = exact_div(work, Poly<Rational>::linear_root(r));
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.fully_split = work.degree() == 0;
    return out;
}

} // namespace act
