#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "pt/gauss_rational.hpp"

namespace pt {

// Exact Newton interpolation through the given points, returned as monomial
// coefficients in ascending degree with trailing zeros trimmed.  Abscissae
// must be distinct.
inline std::vector<GaussRational> fit_polynomial(
    const std::vector<std::pair<long long, GaussRational>>& pts) {
    const std::size_t n = pts.size();
    if (n == 0) return {};

    // Divided differences.
    std::vector<GaussRational> dd(n);
    for (std::size_t k = 0; k < n; ++k) dd[k] = pts[k].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t k = n - 1; k >= level; --k) {
            GaussRational dx{Rational(pts[k].first - pts[k - level].first)};
            if (dx.is_zero()) throw ArithmeticError("repeated interpolation abscissa");
            dd[k] = (dd[k] - dd[k - 1]) / dx;
        }
    }

    // Expand the Newton form into monomial coefficients.
    std::vector<GaussRational> coeffs{dd[0]};
    std::vector<GaussRational> basis{GaussRational(1)};  // prod (x - x_j)
    for (std::size_t level = 1; level < n; ++level) {
        // basis *= (x - x_{level-1})
        GaussRational shift{Rational(-pts[level - 1].first)};
        std::vector<GaussRational> next(basis.size() + 1);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k] += basis[k] * shift;
            next[k + 1] += basis[k];
        }
        basis = std::move(next);
        if (coeffs.size() < basis.size()) coeffs.resize(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += dd[level] * basis[k];
    }

    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

inline GaussRational eval_polynomial(const std::vector<GaussRational>& coeffs, long long x) {
    GaussRational acc;
    GaussRational xv{Rational(x)};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * xv + coeffs[k];
    return acc;
}

// All divisors of |n|, both signs, unordered.  n must be nonzero.
inline std::vector<long long> all_divisors_signed(long long n) {
    if (n == 0) throw ArithmeticError("divisors of zero requested");
    long long a = n < 0 ? -n : n;
    std::vector<long long> out;
    for (long long d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        if (d != a / d) {
            out.push_back(a / d);
            out.push_back(-(a / d));
        }
    }
    return out;
}

// Integer solutions of "(a s + b) divides (c s + d)" over s >= s_min, with
// the quotient attached.  When (c, d) is an exact integer multiple of (a, b)
// the quotient is that constant for every s; otherwise a s + b must divide
// the resultant a*d - b*c, leaving finitely many s.
struct DivisorQuotients {
    std::optional<long long> constant_quotient;
    std::vector<std::pair<long long, long long>> at;  // (s, quotient)
};

inline DivisorQuotients divisor_quotients(long long a, long long b, long long c, long long d,
                                          long long s_min) {
    if (a == 0) throw ArithmeticError("degenerate divisor condition");
    DivisorQuotients out;
    long long K = a * d - b * c;
    if (K == 0) {
        if (c % a == 0) out.constant_quotient = c / a;
        return out;
    }
    for (long long div : all_divisors_signed(K)) {
        if ((div - b) % a != 0) continue;
        long long s = (div - b) / a;
        if (s < s_min) continue;
        long long num = c * s + d;
        if (num % div != 0) continue;
        out.at.push_back({s, num / div});
    }
    return out;
}

// Floor of sqrt(n) for n >= 0.
inline long long integer_sqrt(long long n) {
    if (n < 0) throw ArithmeticError("integer sqrt of a negative number");
    if (n == 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool perfect_square(long long n, long long* root = nullptr) {
    if (n < 0) return false;
    long long r = integer_sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

}  // namespace pt
