#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace emcert {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}

    /// Parses "p" or "p/q" (arbitrary precision, optional sign).
    static Rational from_string(const std::string& s);

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }
    Rational inverse() const;

    double to_double() const { return q_.get_d(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string to_string() const;

private:
    void canonicalize() { q_.canonicalize(); }
    mpq_class q_;
};

/// Largest integer m with m*m <= n, in pure integer arithmetic.
std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace emcert
