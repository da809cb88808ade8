#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pt/system.hpp"

namespace pt {

// A single linear relation between the deformation exponents that a generic
// balance requires.  Concrete runs never carry one.
struct BalanceConstraint {
    enum class Kind { EpsEquals, MuEquals, EpsMinusMu } kind;
    long long value = 0;

    // Full exponent assignment given the remaining free value.
    std::map<ExpVar, long long> tie(long long free_value) const;
    // Smallest free value keeping eps >= 1 and mu >= 1.
    long long min_free_value() const;
    std::string to_string() const;

    friend bool operator==(const BalanceConstraint& a, const BalanceConstraint& b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

struct BalanceResult {
    int alpha = 0;
    std::optional<BalanceConstraint> constraint;
    // Leading coefficient in general-mode variables (phi_x jets, parameters);
    // generic results may carry eps symbolically.
    Expr lambda0;
    // Exponent of phi at the balance, after applying the constraint.
    ExpPoly leading_exponent;
    // Indices into sys.terms() participating at leading order.
    std::vector<std::size_t> leading_terms;
    bool generic = false;
};

// All admissible dominant balances of the equation under u ~ lambda0 phi^alpha
// with integer alpha <= -1.  When all slot exponents are concrete (either in
// the system or through eps/mu), this is finite exponent arithmetic; when one
// stays symbolic the divisor analysis below enumerates every (alpha,
// constraint) pair valid for infinitely many exponents, and lambda0 is
// reconstructed exactly from concrete instances by polynomial interpolation.
//
// Results are sorted by alpha descending.  An empty vector means no admissible
// balance (the equation fails the test at the first step).
std::vector<BalanceResult> dominant_balances(const PDESystem& sys,
                                             std::optional<long long> eps = std::nullopt,
                                             std::optional<long long> mu = std::nullopt);

}  // namespace pt
