#pragma once

// Travelling-wave reduction u(x, t) = zeta(z) with z = x - v t: turns an
// evolution equation into an ODE in z and, when the reduced equation is a
// total z-derivative (possibly after dividing by zeta_z), records a first
// integral.

#include <optional>

#include "pt/expr.hpp"
#include "pt/system.hpp"

namespace pt {

struct TravellingWaveODE {
    Symbol z = Symbol::indep("z");
    Symbol speed = Symbol::param("v");
    Expr ode;        // left-hand side of (equation) == 0 in the wave frame
    int order = 0;   // highest zeta-derivative present

    // F with dF/dz equal to the ode, or to ode / zeta_z when the division
    // flag is set; the integration constant is dropped.
    std::optional<Expr> first_integral;
    bool integrated_after_division = false;

    Symbol jet(int k) const { return Symbol::jet("zeta", k, 0, 'z', 't'); }
};

// Substitutes u_{ax, bt} -> (-v)^b zeta^(a + b) into the equation with its
// deformation exponents fixed.
TravellingWaveODE reduce_travelling(const PDESystem& sys,
                                    std::optional<long long> eps = std::nullopt,
                                    std::optional<long long> mu = std::nullopt);

// d/dz in the wave frame: zeta-jets step up one order, z differentiates to 1,
// everything else is constant.
Expr d_dz(const Expr& e);

}  // namespace pt
