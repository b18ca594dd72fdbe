#ifndef ACT_POLYNOMIAL_HPP
#define ACT_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "act/errors.hpp"
#include "act/rational.hpp"

namespace act {

// Univariate polynomial over an exact field K, coefficients in ascending
// order with a nonzero leading coefficient (zero polynomial: empty vector,
// degree -1).
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }
    // t - r
    static Poly linear_root(const K& r) { return Poly(std::vector<K>{K(0) - r, K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

    const K& leading() const {
        if (c_.empty()) throw usage_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<K> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = K(0) - a.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& a) {
        if (is_zero(s)) return Poly();
        std::vector<K> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a.c_[i];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K operator()(const K& x) const {  // Horner
        K acc = K(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero_poly()) throw usage_error("monic of zero polynomial");
        if (leading() == K(1)) return *this;
        K inv = K(1) / leading();
        return inv * *this;
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero_poly()) throw usage_error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly<K>(), a};
    std::vector<K> quo(static_cast<std::size_t>(a.degree() - db + 1), K(0));
    K lead_inv = K(1) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        K f = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (is_zero(f)) continue;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] =
                rem[static_cast<std::size_t>(i - db + j)] - f * b.coeff(j);
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

// Exact quotient; throws internal_error if b does not divide a.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero_poly()) throw internal_error("exact_div: inexact polynomial division");
    return q;
}

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    if (d.is_zero_poly()) return a.is_zero_poly();
    return poly_mod(a, d).is_zero_poly();
}

// Monic gcd by the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero_poly()) {
        Poly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a.monic();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& base, int e) {
    Poly<K> acc = Poly<K>::constant(K(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Squarefree part f / gcd(f, f').
template <class K>
Poly<K> squarefree_part(const Poly<K>& f) {
    if (f.is_zero_poly()) throw usage_error("squarefree_part of zero polynomial");
    if (f.is_constant()) return Poly<K>::constant(K(1));
    Poly<K> g = poly_gcd(f, f.derivative());
    return exact_div(f.monic(), g).monic();
}

// Yun's algorithm (characteristic 0): f = prod_e part(e)^e with each part(e)
// squarefree, pairwise coprime, monic. Only e with deg part(e) > 0 listed.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& f) {
    if (f.is_zero_poly()) throw usage_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly<K>, int>> parts;
    Poly<K> p = f.monic();
    if (p.is_constant()) return parts;
    Poly<K> d = p.derivative();
    Poly<K> g = poly_gcd(p, d);
    Poly<K> w = exact_div(p, g);
    Poly<K> y = exact_div(d, g);
    Poly<K> z = y - w.derivative();
    int e = 1;
    while (!w.is_constant()) {
        Poly<K> s = poly_gcd(w, z);
        if (s.degree() > 0) parts.emplace_back(s.monic(), e);
        w = exact_div(w, s);
        y = exact_div(z, s);
        z = y - w.derivative();
        ++e;
    }
    return parts;
}

template <class K>
std::string to_string(const Poly<K>& f, const std::string& var = "t") {
    if (f.is_zero_poly()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        K c = f.coeff(i);
        if (is_zero(c)) continue;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (!s.empty()) {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// ---- Real-root machinery (ordered field only) ------------------------------

// Number of sign changes in the Sturm chain evaluated at +/- infinity is read
// off the leading coefficients.
int real_root_count(const Poly<Rational>& f);

// Distinct rational roots (each verified exactly and deflated to full
// multiplicity); `fully_split` is true when the polynomial factors into
// linear rational factors times a constant.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    bool fully_split = false;
};
RationalRoots rational_roots(const Poly<Rational>& f);

// Numeric roots of an exact polynomial (companion-matrix based), sorted by
// (re, im) for deterministic indexing.
std::vector<std::complex<double>> numeric_roots(const Poly<Rational>& f);
std::vector<std::complex<double>> numeric_roots(const Poly<GaussianRational>& f);

} // namespace act

#endif
