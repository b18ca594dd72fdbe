#ifndef ACT_RATIONAL_HPP
#define ACT_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "act/errors.hpp"

namespace act {

// Arbitrary-precision rational scalar. Arithmetic on canonical values stays
// canonical; construction from a numerator/denominator pair does not, so all
// such construction goes through rat().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rat_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// Parses "p", "-p", "p/q". Rejects zero denominators and garbage.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// |q| = (p/r)^2 for rational p/r?  Returns the square root if so.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

// Element of Q(i), stored as an exact real/imaginary pair. Used for tensors
// over the complex field and nowhere else; complexified spectra of real
// operators stay symbolic or go through the floating path.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(long v) : re(v), im(0) {}           // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw usage_error("division by zero in Q(i)");
        return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }

inline std::string to_string(const GaussianRational& z) {
    if (is_zero(z.im)) return to_string(z.re);
    std::string s = to_string(z.re);
    if (sgn(z.im) >= 0) s += "+";
    return s + to_string(z.im) + "i";
}

inline std::complex<double> to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& z) { return {z.re.get_d(), z.im.get_d()}; }

// Nonnegative rational used to pick structurally large pivots in exact
// elimination (keeps intermediate numbers smaller; any nonzero pivot is valid).
inline Rational pivot_size(const Rational& q) { return rat_abs(q); }
inline Rational pivot_size(const GaussianRational& z) { return Rational(z.re * z.re + z.im * z.im); }

// Zero-test policy for the two scalar domains. Exact values are compared to
// zero directly; floating values against tolerance * context-supplied scale.
struct ScalarDomain {
    enum class Kind { exact, floating };
    Kind kind = Kind::exact;
    double tolerance = 1e-9;

    static ScalarDomain exact() { return {Kind::exact, 0.0}; }
    static ScalarDomain floating(double tol = 1e-9) {
        if (tol < 0) throw usage_error("negative tolerance");
        return {Kind::floating, tol};
    }
    bool is_exact() const { return kind == Kind::exact; }
    bool is_zero(double value, double scale) const {
        if (kind == Kind::exact) return value == 0.0;
        return std::abs(value) <= tolerance * std::abs(scale);
    }
};

} // namespace act

#endif
