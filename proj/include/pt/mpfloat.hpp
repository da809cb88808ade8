#pragma once

// Floating-point layer over the exact types: fixed-precision binary floats
// (150- and 300-bit mantissas), a small complex value type, exact Gamma
// values at integer and half-integer arguments, and the Stirling ratio used
// by the convergence diagnostics.  Exact data converts to floats at the last
// moment; nothing here ever feeds a float back into the symbolic layer.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "pt/errors.hpp"
#include "pt/gauss_rational.hpp"

namespace pt {

using Float150 = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<150, boost::multiprecision::backends::digit_base_2>>;
using Float300 = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<300, boost::multiprecision::backends::digit_base_2>>;

template <typename F>
F to_float(const Integer& n) {
    return F(n);
}

template <typename F>
F to_float(const Rational& q) {
    return to_float<F>(numerator(q)) / to_float<F>(denominator(q));
}

template <typename F>
const F& pi_value() {
    static const F value = 4 * atan(F(1));
    return value;
}

// Minimal complex arithmetic.  std::complex is only specified for the builtin
// floating types, so the multiprecision work carries its own.
template <typename F>
struct Cplx {
    F re{};
    F im{};

    Cplx operator-() const { return {-re, -im}; }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const F& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        F d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    F norm2() const { return re * re + im * im; }
    F abs() const {
        using boost::multiprecision::sqrt;
        return sqrt(norm2());
    }
};

template <typename F>
Cplx<F> to_cplx(const GaussRational& g) {
    return {to_float<F>(g.re()), to_float<F>(g.im())};
}

template <typename F>
F magnitude(const GaussRational& g) {
    using boost::multiprecision::sqrt;
    return sqrt(to_float<F>(g.norm2()));
}

// Gamma(j/2) for integer j >= 1, exactly: a rational factor times sqrt(pi)
// when j is odd.
struct GammaHalf {
    Rational factor{1};
    bool sqrt_pi = false;
};

inline GammaHalf gamma_half(int j) {
    if (j < 1) throw ArithmeticError("gamma_half needs a positive argument, got " + std::to_string(j));
    GammaHalf g;
    if (j % 2 == 0) {
        Integer f = 1;
        for (int m = 2; m <= j / 2 - 1; ++m) f *= m;
        g.factor = Rational(f);
    } else {
        Integer dd = 1;
        for (int m = j - 2; m >= 1; m -= 2) dd *= m;
        g.factor = Rational(dd, Integer(1) << ((j - 1) / 2));
        g.sqrt_pi = true;
    }
    return g;
}

template <typename F>
F gamma_half_value(int j) {
    GammaHalf g = gamma_half(j);
    F v = to_float<F>(g.factor);
    if (g.sqrt_pi) v *= sqrt(pi_value<F>());
    return v;
}

// Gamma(n/2) divided by its Stirling approximation
// sqrt(2 pi) e^(-n/2) (n/2)^((n-1)/2); approaches 1 as n grows.
template <typename F>
F stirling_ratio(int n) {
    F half_n = F(n) / 2;
    F approx = sqrt(2 * pi_value<F>()) * exp(-half_n) * pow(half_n, (F(n) - 1) / 2);
    return gamma_half_value<F>(n) / approx;
}

}  // namespace pt
