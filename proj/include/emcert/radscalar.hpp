#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "emcert/rational.hpp"

namespace emcert {

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    GaussianRational operator-() const { return {-re, -im}; }

    /// (x + iy)^-1 = (x - iy)/(x^2 + y^2).
    GaussianRational inverse() const;
};

/// Writes n = s*s*d with d squarefree; returns {s, d}. Trial division.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Exact element of Q(i, sqrt(m1), ..., sqrt(mk)): a finite sum of terms
/// (a + b*i)*sqrt(m) keyed by squarefree radicand m (m = 1 is the rational
/// part). Canonical form: no stored coefficient is zero, every key is
/// squarefree; the zero scalar has an empty term map. Equality is therefore
/// structural.
class RadScalar {
public:
    using TermMap = std::map<std::uint64_t, GaussianRational>;

    RadScalar() = default;
    RadScalar(long n) { if (n != 0) terms_[1] = {Rational(n), Rational(0)}; }
    RadScalar(const Rational& r) { if (!r.is_zero()) terms_[1] = {r, Rational(0)}; }
    RadScalar(const GaussianRational& c) { if (!c.is_zero()) terms_[1] = c; }

    /// sqrt(n) for n >= 0, normalized so the stored radicand is squarefree
    /// (sqrt(12) becomes 2*sqrt(3)).
    static RadScalar sqrt_int(std::uint64_t n);
    static RadScalar i();
    /// Single term (re + im*i)*sqrt(rad); rad need not be squarefree.
    static RadScalar term(const Rational& re, const Rational& im, std::uint64_t rad);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when the only term is the rational (radicand 1, imaginary 0) part.
    bool is_rational() const;

    RadScalar& operator+=(const RadScalar& o);
    RadScalar& operator-=(const RadScalar& o);
    friend RadScalar operator+(RadScalar a, const RadScalar& b) { a += b; return a; }
    friend RadScalar operator-(RadScalar a, const RadScalar& b) { a -= b; return a; }
    friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
    RadScalar& operator*=(const RadScalar& o) { *this = *this * o; return *this; }
    RadScalar operator-() const;

    friend bool operator==(const RadScalar& a, const RadScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadScalar& a, const RadScalar& b) { return !(a == b); }

    /// Complex conjugate (negates every imaginary coefficient).
    RadScalar conj() const;

    /// Exact multiplicative inverse. Rationalizes by repeated conjugation:
    /// each step picks a prime p present in some radicand, multiplies by the
    /// conjugate that flips the sign of every sqrt(m) with p | m, and recurses
    /// on the resulting element of the smaller extension, bottoming out at
    /// Q(i). Throws std::domain_error on zero.
    RadScalar inverse() const;

    std::complex<double> to_complex() const;

    const TermMap& terms() const { return terms_; }

    std::string to_string() const;

private:
    void normalize();
    TermMap terms_;
};

inline RadScalar inverse(const RadScalar& a) { return a.inverse(); }
inline std::complex<double> to_complex(const RadScalar& a) { return a.to_complex(); }

}  // namespace emcert
