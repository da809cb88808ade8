#pragma once

#include <optional>
#include <string>

#include "pt/expr.hpp"

namespace pt {

// Exponent attached to a deformed derivative: either a concrete integer >= 1
// or one of the declared exponent variables (eps, mu).
struct DeformExponent {
    std::optional<long long> value;
    std::optional<ExpVar> var;

    static DeformExponent concrete(long long v);
    static DeformExponent symbolic(ExpVar v);

    bool is_concrete() const { return value.has_value(); }
    ExpPoly poly() const;
    std::string to_string() const;

    friend bool operator==(const DeformExponent& a, const DeformExponent& b) {
        return a.value == b.value && a.var == b.var;
    }
};

// Deformation of the n-th spatial derivative of the field:
//
//   n-th derivative  ->  i^(e-1) * d_x^(n-1) (u_x^e)
//
// which for n == 1 is the familiar -i (i u_x)^e.  At e == 1 every order
// collapses back to the plain derivative.  Works for concrete and symbolic
// exponents alike; the symbolic case keeps i^(e-1) and u_x^e as factors and
// applies the chain rule exactly.
//
// Throws UnsupportedDeformation for order < 1 or a concrete exponent < 1.
Expr deform_derivative(const std::string& field, int order, const DeformExponent& e);

// Image of a jet expression under the PT reflection x -> -x, t -> -t,
// i -> -i: coefficients are conjugated, every jet factor picks up the parity
// sign of its derivative count, symbolic powers of i are conjugated via
// (-i)^e == i^(3e).  Only constants, parameters, jets, exponent symbols and
// powers of i may appear.
Expr pt_image(const Expr& e);

// An evolution equation F = 0 written with a +u_t term is PT-symmetric
// exactly when F maps to -F under the reflection.
bool is_pt_antisymmetric(const Expr& f);

}  // namespace pt
