#pragma once

#include <optional>
#include <vector>

#include "pt/balance.hpp"

namespace pt {

// Quadratic factor a r^2 + b r + c surviving integer-root deflation, with its
// discriminant analysis.
struct QuadraticFactor {
    long long a = 0, b = 0, c = 0;
    long long disc = 0;
    bool square_disc = false;
};

// Linearized probe of one concrete balance: substituting
//     u = lambda0 phi^alpha + theta phi^(r+alpha)
// and collecting the term linear in theta, the lowest phi-order carries
// content * P(r) with P a primitive integer polynomial.  Roots of P are the
// resonances: the orders where the recursion for lambda_r degenerates.
struct ResonanceReport {
    std::vector<long long> poly;     // P ascending in r, positive leading coefficient
    Expr content;                    // exact cofactor: content * P(r) = probe coefficient
    std::vector<long long> integer_roots;  // ascending, with multiplicity
    std::vector<long long> remainder;      // P deflated by all integer roots
    bool universal = false;                // r = -1 is present

    // Discriminant data when the deflated remainder is quadratic.
    std::optional<QuadraticFactor> quadratic() const;

    // The full probe coefficient content * P(r) as an expression, with r the
    // exponent symbol.
    Expr full() const;
};

// Probe spectrum for a balance instantiated at concrete exponents.  Generic
// balances are instantiated through eps/mu first (values must satisfy the
// balance constraint).
ResonanceReport resonance_spectrum(const PDESystem& sys, const BalanceResult& bal,
                                   std::optional<long long> eps = std::nullopt,
                                   std::optional<long long> mu = std::nullopt);

// One exponent value at which the deflated resonance factor acquires integer
// roots it does not have generically.
struct IntegralityHit {
    long long eps = 0;
    std::vector<long long> roots;
};

// Exact description of how the resonance spectrum of a generic balance varies
// along its exponent family (the free value of the balance constraint).
struct IntegralityRecord {
    // Coefficient k of r^k of the deflated polynomial (universal factor r+1
    // removed), as an integer polynomial in the family parameter, ascending.
    std::vector<std::vector<long long>> family;
    // Integer roots present for every admissible exponent (beyond r = -1).
    std::vector<long long> always_roots;
    bool always_integral = false;  // deflated factor splits over Z for every exponent
    // Exceptional exponents where extra integer roots appear.
    std::vector<IntegralityHit> sporadic;
    // Discriminant of the monic quadratic remainder as a polynomial in the
    // family parameter, ascending; empty when the remainder is linear.
    std::vector<long long> disc;
};

// Diophantine analysis of the resonance family of a generic balance.  The
// family parameter is the free value of the balance constraint (eps for an
// eps=mu tie).
IntegralityRecord integrality_analysis(const PDESystem& sys, const BalanceResult& bal);

}  // namespace pt
