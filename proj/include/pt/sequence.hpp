#pragma once

// Convergence diagnostics for a solved expansion: the coefficient sequence at
// concrete parameter values, Cauchy's root test on it, and the Gamma-envelope
// decay check.

#include <utility>
#include <vector>

#include "pt/expansion.hpp"
#include "pt/mpfloat.hpp"

namespace pt {

struct CoefficientEntry {
    int order = 0;        // expansion index k: the coefficient of phi^(alpha + k)
    int index = 0;        // series label n = k + alpha - 1, placing the entry at phi^(n + 1)
    Expr exact;           // coefficient with parameters still symbolic
    GaussRational value;  // exact evaluation at the sequence's bindings
};

struct CoefficientSequence {
    std::vector<CoefficientEntry> entries;  // ascending in order
    std::vector<std::pair<Symbol, GaussRational>> bindings;
};

// Collects the regular-part coefficients (series label >= 1) of a solved
// expansion and evaluates each exactly at `bindings`.  Throws if a
// coefficient still contains an unbound symbol afterwards.
CoefficientSequence sequence_from_expansion(const PainleveExpansion& exp,
                                            std::vector<std::pair<Symbol, GaussRational>> bindings);

enum class ConvergenceVerdict { ConvergentIndication, Inconclusive };

std::string convergence_name(ConvergenceVerdict v);

struct RootTestResult {
    std::vector<std::pair<int, Float150>> values;  // (k, |coeff|^(1/k)) over nonzero entries
    Float150 trend_slope{};                        // least-squares slope of the values
    Float150 tail{};                               // last value, a crude limit estimate
    ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
};

// Root test over the nonzero entries.  Indicates convergence only when the
// tail sits below 1 and the trend does not grow; fewer than ten nonzero
// entries never count as evidence either way.
RootTestResult root_test(const CoefficientSequence& seq);

struct BoundEntry {
    int index = 0;  // series label n, decomposed as 3 * block - nu
    int block = 0;
    int nu = 0;
    // p_n: the coefficient rescaled by 2^(3 block + 4 - nu) Gamma(n/2) kappa^(2 block - 1),
    // where Gamma's sqrt(pi) factor (odd n) is tracked in the flag instead.
    Expr scaled;
    bool sqrt_pi = false;
    Float150 lhs_re{}, lhs_im{};  // |Re coeff|, |Im coeff| at the bindings
    Float150 rhs_re{}, rhs_im{};  // envelope |Re p_n| resp. |Im p_n| over the rescaling factor
    bool holds = false;
};

struct BoundCheckReport {
    std::vector<BoundEntry> entries;
    bool all_hold = true;
};

// Checks every entry with series label in [1, max_index] against the
// Gamma-envelope: the rescaled coefficient p_n must come out free of kappa,
// and both real and imaginary parts must sit inside the envelope built from
// it.  A coefficient that decays at least as fast as 1/Gamma(n/2) in n and as
// kappa^(1 - 2 block) in kappa passes; anything slower fails.
BoundCheckReport bound_check(const CoefficientSequence& seq, int max_index, const Symbol& kappa);

}  // namespace pt
