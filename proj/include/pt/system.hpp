#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pt/deform.hpp"
#include "pt/expr.hpp"

namespace pt {

struct ParamDecl {
    std::string name;
    enum class Type { Real, Integer, Complex } type = Type::Real;

    friend bool operator==(const ParamDecl& a, const ParamDecl& b) {
        return a.name == b.name && a.type == b.type;
    }
};

// One structural factor D_n(u; e): the deformed n-th spatial derivative.
struct SlotUse {
    int order = 1;
    DeformExponent exponent;
    int power = 1;

    friend bool operator==(const SlotUse& a, const SlotUse& b) {
        return a.order == b.order && a.exponent == b.exponent && a.power == b.power;
    }
};

// One additive term of the equation in structural form:
//     coeff * (params...) * u^u_power * u_t^ut_power * (slots...)
struct EqTerm {
    GaussRational coeff{1};
    std::map<std::string, int> params;
    int u_power = 0;
    int ut_power = 0;
    std::vector<SlotUse> slots;

    friend bool operator==(const EqTerm& a, const EqTerm& b) {
        return a.coeff == b.coeff && a.params == b.params && a.u_power == b.u_power &&
               a.ut_power == b.ut_power && a.slots == b.slots;
    }
};

// An evolution PDE F(u) = 0 in one space dimension, stored structurally so
// that deformation exponents can stay symbolic.  validate() enforces the
// shape the analysis relies on: exactly one u_t term, first order in time,
// normalized to coefficient 1.
class PDESystem {
public:
    PDESystem(std::string name, std::string field, std::vector<ParamDecl> params,
              std::vector<EqTerm> terms);

    static PDESystem burgers();
    static PDESystem kdv();

    const std::string& name() const { return name_; }
    const std::string& field() const { return field_; }
    const std::vector<ParamDecl>& params() const { return params_; }
    const std::vector<EqTerm>& terms() const { return terms_; }
    bool has_param(const std::string& name) const;

    // Highest spatial derivative order; this is the number of arbitrary
    // functions a full Painleve expansion must carry.
    int order() const;

    // True if any slot exponent is the given variable.
    bool uses_exp_var(ExpVar v) const;

    // The equation as an expanded jet expression.  Symbolic slot exponents
    // are instantiated from `eps` / `mu` when given, else kept symbolic.
    Expr expanded(std::optional<long long> eps = std::nullopt,
                  std::optional<long long> mu = std::nullopt) const;

    // Leading phi-exponent of each term under u ~ lambda * phi^alpha, as a
    // polynomial in {alpha, eps, mu}.
    std::vector<ExpPoly> leading_exponents() const;

    // Human-readable structural form, e.g. "u_t + u*D1(u;eps) - i*kappa*D2(u;mu)".
    std::string to_string() const;

    friend bool operator==(const PDESystem& a, const PDESystem& b) {
        return a.name_ == b.name_ && a.field_ == b.field_ && a.params_ == b.params_ &&
               a.terms_ == b.terms_;
    }

private:
    std::string name_;
    std::string field_;
    std::vector<ParamDecl> params_;
    std::vector<EqTerm> terms_;

    void validate_and_normalize();
};

}  // namespace pt
