#include "emcert/radscalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace emcert {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
    if (n == 0) return {0, 0};
    std::uint64_t outside = 1, inside = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned k = 0; k + 1 < e; k += 2) outside *= p;
        if (e % 2) inside *= p;
    }
    inside *= n;  // remaining prime factor, multiplicity one
    return {outside, inside};
}

bool is_squarefree(std::uint64_t n) {
    return n != 0 && squarefree_split(n).first == 1;
}

RadScalar RadScalar::sqrt_int(std::uint64_t n) {
    if (n == 0) return RadScalar();
    auto [s, d] = squarefree_split(n);
    return term(Rational(static_cast<long>(s)), Rational(0), d);
}

RadScalar RadScalar::i() {
    return term(Rational(0), Rational(1), 1);
}

RadScalar RadScalar::term(const Rational& re, const Rational& im, std::uint64_t rad) {
    RadScalar r;
    if (rad == 0) throw std::invalid_argument("RadScalar: radicand must be positive");
    if (re.is_zero() && im.is_zero()) return r;
    auto [s, d] = squarefree_split(rad);
    Rational scale(static_cast<long>(s));
    r.terms_[d] = {re * scale, im * scale};
    return r;
}

bool RadScalar::is_one() const {
    if (terms_.size() != 1) return false;
    auto it = terms_.begin();
    return it->first == 1 && it->second.re.is_one() && it->second.im.is_zero();
}

bool RadScalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    auto it = terms_.begin();
    return it->first == 1 && it->second.im.is_zero();
}

void RadScalar::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

RadScalar& RadScalar::operator+=(const RadScalar& o) {
    for (const auto& [rad, c] : o.terms_) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RadScalar& RadScalar::operator-=(const RadScalar& o) {
    for (const auto& [rad, c] : o.terms_) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, -c);
        } else {
            it->second = it->second - c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RadScalar operator*(const RadScalar& a, const RadScalar& b) {
    RadScalar r;
    for (const auto& [m1, c1] : a.terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            // sqrt(m1)*sqrt(m2) = g*sqrt((m1/g)*(m2/g)) with g = gcd; the
            // cofactors are coprime and squarefree, so no re-factoring needed.
            std::uint64_t g = std::gcd(m1, m2);
            std::uint64_t rad = (m1 / g) * (m2 / g);
            GaussianRational c = c1 * c2;
            if (g != 1) {
                Rational gs(static_cast<long>(g));
                c = {c.re * gs, c.im * gs};
            }
            auto it = r.terms_.find(rad);
            if (it == r.terms_.end()) r.terms_.emplace(rad, c);
            else it->second = it->second + c;
        }
    }
    r.normalize();
    return r;
}

RadScalar RadScalar::operator-() const {
    RadScalar r;
    for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, -c);
    return r;
}

RadScalar RadScalar::conj() const {
    RadScalar r;
    for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, c.conj());
    return r;
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

}  // namespace

RadScalar RadScalar::inverse() const {
    if (is_zero()) throw std::domain_error("RadScalar: inverse of zero");
    // Find a prime appearing in some radicand; none means we are in Q(i).
    std::uint64_t p = 0;
    for (const auto& [rad, c] : terms_) {
        if (rad > 1) { p = smallest_prime_factor(rad); break; }
    }
    if (p == 0) {
        return RadScalar(terms_.begin()->second.inverse());
    }
    // Conjugate flipping the sign of every term containing sqrt(p).
    RadScalar c;
    for (const auto& [rad, coef] : terms_)
        c.terms_.emplace(rad, (rad % p == 0) ? -coef : coef);
    RadScalar reduced = (*this) * c;  // free of sqrt(p)
    return c * reduced.inverse();
}

std::complex<double> RadScalar::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (const auto& [rad, c] : terms_) {
        double s = (rad == 1) ? 1.0 : std::sqrt(static_cast<double>(rad));
        z += std::complex<double>(c.re.to_double() * s, c.im.to_double() * s);
    }
    return z;
}

std::string RadScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit_part = [&](const Rational& v, bool imag, std::uint64_t rad) {
        if (v.is_zero()) return;
        Rational a = v.abs();
        if (!first) os << (v.sign() < 0 ? " - " : " + ");
        else if (v.sign() < 0) os << "-";
        first = false;
        bool unit_coeff = a.is_one() && (imag || rad > 1);
        if (!unit_coeff) os << a.to_string();
        if (imag) os << "i";
        if (rad > 1) {
            if (!unit_coeff || imag) os << "*";
            os << "sqrt(" << rad << ")";
        }
    };
    for (const auto& [rad, c] : terms_) {
        emit_part(c.re, false, rad);
        emit_part(c.im, true, rad);
    }
    return os.str();
}

}  // namespace emcert
