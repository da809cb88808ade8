#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "pt/errors.hpp"

namespace pt {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exact complex number a + b*i with rational a, b.  This is the coefficient
// field of the whole engine; nothing upstream of the numeric diagnostics ever
// rounds.  Values are kept canonical by the underlying GMP rationals.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int n) : re_(n) {}                 // NOLINT: implicit by design
    GaussRational(long n) : re_(n) {}                // NOLINT
    GaussRational(long long n) : re_(static_cast<long>(n)) {}  // NOLINT
    GaussRational(Rational re) : re_(std::move(re)) {}         // NOLINT
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    // i^k for any integer k (k may be negative).
    static GaussRational i_pow(long long k);

    // Accepts the canonical serialization produced by to_string() plus minor
    // variations: "3", "-1/2", "i", "-i", "2*i", "1/2-3/4*i", "i/2".
    static GaussRational from_string(std::string_view s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_integer() const;

    GaussRational conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    GaussRational inv() const;
    GaussRational pow(long long k) const;  // negative k inverts first

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    // Canonical, decimal-free: "0", "5", "-1/2", "i", "-3/4*i", "1/2+2*i".
    std::string to_string() const;

    std::size_t hash() const;

private:
    Rational re_{0};
    Rational im_{0};
};

// Readable shorthand used throughout the engine sources.
inline GaussRational grat(long long num, long long den = 1) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    return GaussRational(Rational(Integer(num), Integer(den)));
}

std::string rational_to_string(const Rational& q);
Rational rational_from_string(std::string_view s);

}  // namespace pt
