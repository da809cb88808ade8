#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pt/balance.hpp"
#include "pt/resonance.hpp"
#include "pt/series.hpp"

namespace pt {

// Outcome of the order-by-order check at one resonance: the pivot vanishes
// there by construction, so the equation is solvable only if the remaining
// residual is zero, and the coefficient becomes a free parameter (or takes a
// caller-supplied value).
struct CompatRecord {
    int index = 0;
    Expr residual;
    bool compatible = false;
    bool bound = false;
};

struct ExpansionOptions {
    AnsatzMode mode = AnsatzMode::Reduced;
    int order = 30;
    std::optional<long long> eps;
    std::optional<long long> mu;
    std::map<int, Expr> bind;  // resonance index -> value for that coefficient
};

struct PainleveExpansion {
    AnsatzMode mode = AnsatzMode::Reduced;
    int alpha = 0;
    long long base_exponent = 0;  // phi-order of the leading equation
    int order = 0;                // highest index actually solved
    std::vector<Expr> coeffs;     // lambda_0 .. lambda_order
    std::vector<int> free_params;
    std::vector<CompatRecord> compat;
    bool aborted = false;  // stopped at an incompatible resonance

    PhiSeries series() const;
};

// Solve the expansion coefficients order by order.  The requested order is
// raised if needed so that every positive integer resonance is examined.
PainleveExpansion expand(const PDESystem& sys, const BalanceResult& bal,
                         const ResonanceReport& rep, const ExpansionOptions& opt);

// Equation evaluated on the truncated series, cut `extra` orders above the
// last solved one.  Every order the driver solved must come back zero; this
// is the master self-check used by the tests and the verify command.
PhiSeries expansion_residual(const PDESystem& sys, const PainleveExpansion& exp,
                             std::optional<long long> eps = std::nullopt,
                             std::optional<long long> mu = std::nullopt, int extra = 0);

enum class Classification { Passes, Defective, Fails };

std::string classification_name(Classification c);

struct PainleveVerdict {
    Classification cls = Classification::Fails;
    std::string justification;
};

// The integrability verdict: an expansion passes when the arbitrary singular
// surface plus the free resonance coefficients supply as many parameters as
// the differential order of the equation.
PainleveVerdict classify(const PDESystem& sys, const BalanceResult& bal,
                         const PainleveExpansion& exp, const ResonanceReport& rep);

}  // namespace pt
