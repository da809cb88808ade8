#include "pt/deform.hpp"

namespace pt {

DeformExponent DeformExponent::concrete(long long v) {
    DeformExponent e;
    e.value = v;
    return e;
}

DeformExponent DeformExponent::symbolic(ExpVar v) {
    DeformExponent e;
    e.var = v;
    return e;
}

ExpPoly DeformExponent::poly() const {
    if (value) return ExpPoly(*value);
    return ExpPoly::var(*var);
}

std::string DeformExponent::to_string() const {
    if (value) return std::to_string(*value);
    return exp_var_name(*var);
}

Expr deform_derivative(const std::string& field, int order, const DeformExponent& e) {
    if (order < 1)
        throw UnsupportedDeformation("deformation order must be >= 1, got " +
                                     std::to_string(order));
    if (e.value && *e.value < 1)
        throw UnsupportedDeformation("deformation exponent must be >= 1, got " +
                                     std::to_string(*e.value));

    ExpPoly ep = e.poly();
    Expr ux{Symbol::jet(field, 1, 0)};
    Expr body = ux.pow(ep);
    for (int k = 1; k < order; ++k) body = body.differentiate(Var::X, DiffMode::General);

    Expr unit = Expr::sym_pow(Symbol::imag_unit(), ep - ExpPoly(1));
    return unit * body;
}

Expr pt_image(const Expr& e) {
    Expr out;
    for (const auto& t : e.terms()) {
        Expr term{t.coeff.conj()};
        for (const auto& f : t.factors) {
            switch (f.sym.kind()) {
                case SymKind::Jet: {
                    term *= Expr::sym_pow(f.sym, f.exp);
                    // (-1)^((nx+nt)*e) written as i^(2*(nx+nt)*e); the
                    // normalizer folds or reduces it.
                    long long parity = f.sym.nx() + f.sym.nt();
                    term *= Expr::sym_pow(Symbol::imag_unit(), ExpPoly(2 * parity) * f.exp);
                    break;
                }
                case SymKind::ImagUnit:
                    // (-i)^e == (i^3)^e
                    term *= Expr::sym_pow(f.sym, ExpPoly(3) * f.exp);
                    break;
                case SymKind::Param:
                case SymKind::ExpSym:
                    term *= Expr::sym_pow(f.sym, f.exp);
                    break;
                default:
                    throw InternalInvariantViolation(
                        "PT reflection undefined for symbol " + f.sym.name());
            }
        }
        out += term;
    }
    return out;
}

bool is_pt_antisymmetric(const Expr& f) { return pt_image(f) == -f; }

}  // namespace pt
