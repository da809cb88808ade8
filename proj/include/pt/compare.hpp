#pragma once

// Numeric cross-validation of a travelling-wave expansion: integrate the
// reduced ODE from series initial data across a window in z and measure the
// largest relative deviation from the truncated series.

#include <optional>
#include <utility>
#include <vector>

#include "pt/expansion.hpp"
#include "pt/mpfloat.hpp"
#include "pt/system.hpp"

namespace pt {

struct CompareOptions {
    double rtol = 1e-10;         // integrator tolerance
    double window_floor = 0.05;  // smallest admissible |z|; the series is singular at 0
    int samples = 40;            // comparison points across the window
};

struct CompareResult {
    Float150 max_rel_deviation{};
    Float150 at_z{};  // sample where the maximum occurred
    int order = 0;    // truncation order of the series used
};

// Integrates the wave-frame ODE of `sys` starting from the truncated series
// of `exp` at z = lo and compares solution against series at uniform samples
// through z = hi.  `bindings` must pin every series parameter; the wave speed
// is taken from the binding of the frequency parameter "omega".
CompareResult numeric_compare(const PDESystem& sys, const PainleveExpansion& exp,
                              std::optional<long long> eps, std::optional<long long> mu,
                              const std::vector<std::pair<Symbol, GaussRational>>& bindings,
                              const Rational& lo, const Rational& hi,
                              const CompareOptions& opt = {});

}  // namespace pt
