#include "pt/system.hpp"

#include <algorithm>

namespace pt {

PDESystem::PDESystem(std::string name, std::string field, std::vector<ParamDecl> params,
                     std::vector<EqTerm> terms)
    : name_(std::move(name)), field_(std::move(field)), params_(std::move(params)),
      terms_(std::move(terms)) {
    validate_and_normalize();
}

void PDESystem::validate_and_normalize() {
    if (terms_.empty()) throw Error("equation has no terms");
    int ut_index = -1;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const EqTerm& t = terms_[k];
        if (t.ut_power == 0) continue;
        if (t.ut_power > 1) throw Error("equation must be first order in time");
        if (ut_index >= 0) throw Error("equation has more than one time-derivative term");
        if (t.u_power != 0 || !t.slots.empty() || !t.params.empty())
            throw Error("the time-derivative term must be plain dt(u) with a constant coefficient");
        ut_index = static_cast<int>(k);
    }
    if (ut_index < 0) throw Error("equation has no time-derivative term");

    for (const EqTerm& t : terms_) {
        for (const auto& [p, pow] : t.params) {
            if (pow == 0) throw Error("zero parameter power in term");
            if (!has_param(p)) throw Error("undeclared parameter: " + p);
        }
        for (const SlotUse& s : t.slots) {
            if (s.order < 1) throw UnsupportedDeformation("derivative order must be >= 1");
            if (s.power < 1) throw Error("slot power must be >= 1");
            if (s.exponent.value && *s.exponent.value < 1)
                throw UnsupportedDeformation("deformation exponent must be >= 1");
        }
        if (t.coeff.is_zero()) throw Error("zero coefficient in equation term");
    }

    // Normalize to a +dt(u) equation.
    GaussRational c = terms_[ut_index].coeff;
    if (!c.is_one())
        for (EqTerm& t : terms_) t.coeff = t.coeff / c;

    // Keep the time derivative first for readable output.
    if (ut_index != 0) {
        EqTerm ut = terms_[ut_index];
        terms_.erase(terms_.begin() + ut_index);
        terms_.insert(terms_.begin(), ut);
    }
}

bool PDESystem::has_param(const std::string& name) const {
    return std::any_of(params_.begin(), params_.end(),
                       [&](const ParamDecl& p) { return p.name == name; });
}

int PDESystem::order() const {
    int n = 0;
    for (const EqTerm& t : terms_)
        for (const SlotUse& s : t.slots) n = std::max(n, s.order);
    return n;
}

bool PDESystem::uses_exp_var(ExpVar v) const {
    for (const EqTerm& t : terms_)
        for (const SlotUse& s : t.slots)
            if (s.exponent.var == v) return true;
    return false;
}

Expr PDESystem::expanded(std::optional<long long> eps, std::optional<long long> mu) const {
    Expr out;
    for (const EqTerm& t : terms_) {
        Expr term{t.coeff};
        for (const auto& [p, pow] : t.params)
            term *= Expr::sym_pow(Symbol::param(p), ExpPoly(pow));
        if (t.u_power != 0) term *= Expr::sym_pow(Symbol::jet(field_, 0, 0), ExpPoly(t.u_power));
        if (t.ut_power != 0)
            term *= Expr::sym_pow(Symbol::jet(field_, 0, 1), ExpPoly(t.ut_power));
        for (const SlotUse& s : t.slots) {
            DeformExponent e = s.exponent;
            if (e.var == ExpVar::Eps && eps) e = DeformExponent::concrete(*eps);
            if (e.var == ExpVar::Mu && mu) e = DeformExponent::concrete(*mu);
            term *= deform_derivative(field_, s.order, e).pow_int(s.power);
        }
        out += term;
    }
    return out;
}

std::vector<ExpPoly> PDESystem::leading_exponents() const {
    ExpPoly alpha = ExpPoly::var(ExpVar::Alpha);
    std::vector<ExpPoly> out;
    out.reserve(terms_.size());
    for (const EqTerm& t : terms_) {
        ExpPoly e = ExpPoly(t.u_power) * alpha + ExpPoly(t.ut_power) * (alpha - ExpPoly(1));
        for (const SlotUse& s : t.slots)
            e += ExpPoly(s.power) *
                 (s.exponent.poly() * (alpha - ExpPoly(1)) - ExpPoly(s.order - 1));
        out.push_back(e);
    }
    return out;
}

std::string PDESystem::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const EqTerm& t = terms_[k];
        std::vector<std::string> parts;
        for (const auto& [p, pow] : t.params)
            parts.push_back(pow == 1 ? p : p + "^" + std::to_string(pow));
        if (t.u_power > 0)
            parts.push_back(t.u_power == 1 ? field_
                                           : field_ + "^" + std::to_string(t.u_power));
        if (t.ut_power > 0) parts.push_back("dt(" + field_ + ")");
        for (const SlotUse& s : t.slots) {
            std::string d = s.order == 1 ? "D" : "D" + std::to_string(s.order);
            std::string slot = d + "(" + field_ + ";" + s.exponent.to_string() + ")";
            if (s.power != 1) slot += "^" + std::to_string(s.power);
            parts.push_back(slot);
        }
        std::string body;
        for (const auto& p : parts) {
            if (!body.empty()) body += "*";
            body += p;
        }
        std::string coeff;
        bool neg = false;
        GaussRational c = t.coeff;
        if (body.empty()) {
            coeff = c.to_string();
        } else if (c.is_one()) {
            coeff = "";
        } else if (c == GaussRational(-1)) {
            neg = true;
        } else {
            if (c.is_real() && c.re() < 0) {
                neg = true;
                c = -c;
            } else if (c.re() == 0 && c.im() < 0) {
                neg = true;
                c = -c;
            }
            coeff = (c.re() != 0 && c.im() != 0) ? "(" + c.to_string() + ")" : c.to_string();
        }
        std::string term = coeff.empty() ? body : (body.empty() ? coeff : coeff + "*" + body);
        if (k == 0)
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

PDESystem PDESystem::burgers() {
    EqTerm ut;
    ut.ut_power = 1;

    EqTerm advect;
    advect.u_power = 1;
    advect.slots = {SlotUse{1, DeformExponent::symbolic(ExpVar::Eps), 1}};

    EqTerm diffuse;
    diffuse.coeff = -GaussRational::i();
    diffuse.params = {{"kappa", 1}};
    diffuse.slots = {SlotUse{2, DeformExponent::symbolic(ExpVar::Mu), 1}};

    return PDESystem("burgers", "u", {ParamDecl{"kappa", ParamDecl::Type::Real}},
                     {ut, advect, diffuse});
}

PDESystem PDESystem::kdv() {
    EqTerm ut;
    ut.ut_power = 1;

    EqTerm advect;
    advect.coeff = GaussRational(-6);
    advect.u_power = 1;
    advect.slots = {SlotUse{1, DeformExponent::symbolic(ExpVar::Eps), 1}};

    EqTerm disperse;
    disperse.slots = {SlotUse{3, DeformExponent::symbolic(ExpVar::Mu), 1}};

    return PDESystem("kdv", "u", {}, {ut, advect, disperse});
}

}  // namespace pt
