#include "pt/symbol.hpp"

namespace pt {

namespace {

// Derivative suffix in the conventional order: "x", "2x", "x2t", "3t", ...
std::string deriv_suffix(int nx, int nt, char vx, char vt) {
    std::string s;
    if (nx == 1)
        s += vx;
    else if (nx > 1)
        s += std::to_string(nx) + vx;
    if (nt == 1)
        s += vt;
    else if (nt > 1)
        s += std::to_string(nt) + vt;
    return s;
}

}  // namespace

void Symbol::rebuild_name() {
    switch (kind_) {
        case SymKind::IndepVar:
        case SymKind::Param:
        case SymKind::ExpSym:
            name_ = base_;
            break;
        case SymKind::Jet: {
            name_ = base_;
            std::string suffix = deriv_suffix(nx_, nt_, vx_, vt_);
            if (!suffix.empty()) name_ += "_" + suffix;
            break;
        }
        case SymKind::XiDeriv: {
            name_ = "xi";
            std::string suffix = deriv_suffix(0, nt_, 'x', 't');
            if (!suffix.empty()) name_ += "_" + suffix;
            break;
        }
        case SymKind::SeriesCoeff: {
            name_ = "lambda" + std::to_string(index_);
            std::string suffix = deriv_suffix(nx_, nt_, vx_, vt_);
            if (!suffix.empty()) name_ += "_" + suffix;
            break;
        }
        case SymKind::Probe:
            name_ = "theta";
            break;
        case SymKind::ImagUnit:
            name_ = "i";
            break;
    }
}

Symbol Symbol::indep(std::string name) {
    Symbol s;
    s.kind_ = SymKind::IndepVar;
    s.base_ = std::move(name);
    s.rebuild_name();
    return s;
}

Symbol Symbol::param(std::string name) {
    Symbol s;
    s.kind_ = SymKind::Param;
    s.base_ = std::move(name);
    s.rebuild_name();
    return s;
}

Symbol Symbol::exp_sym(ExpVar v) {
    Symbol s;
    s.kind_ = SymKind::ExpSym;
    s.base_ = exp_var_name(v);
    s.index_ = static_cast<int>(v);
    s.rebuild_name();
    return s;
}

ExpVar Symbol::exp_var() const {
    if (kind_ != SymKind::ExpSym)
        throw InternalInvariantViolation("exp_var() on non-exponent symbol " + name_);
    return static_cast<ExpVar>(index_);
}

Symbol Symbol::jet(std::string base, int nx, int nt, char vx, char vt) {
    if (nx < 0 || nt < 0) throw InternalInvariantViolation("negative derivative count");
    Symbol s;
    s.kind_ = SymKind::Jet;
    s.base_ = std::move(base);
    s.nx_ = nx;
    s.nt_ = nt;
    s.vx_ = vx;
    s.vt_ = vt;
    s.rebuild_name();
    return s;
}

Symbol Symbol::xi(int order) {
    if (order < 0) throw InternalInvariantViolation("negative derivative count");
    Symbol s;
    s.kind_ = SymKind::XiDeriv;
    s.nt_ = order;
    s.base_ = "xi";
    s.rebuild_name();
    return s;
}

Symbol Symbol::series_coeff(int index, int nx, int nt) {
    if (nx < 0 || nt < 0) throw InternalInvariantViolation("negative derivative count");
    Symbol s;
    s.kind_ = SymKind::SeriesCoeff;
    s.index_ = index;
    s.nx_ = nx;
    s.nt_ = nt;
    s.base_ = "lambda";
    s.rebuild_name();
    return s;
}

Symbol Symbol::probe() {
    Symbol s;
    s.kind_ = SymKind::Probe;
    s.base_ = "theta";
    s.rebuild_name();
    return s;
}

Symbol Symbol::imag_unit() {
    Symbol s;
    s.kind_ = SymKind::ImagUnit;
    s.base_ = "i";
    s.rebuild_name();
    return s;
}

Symbol Symbol::with_derivs(int nx, int nt) const {
    switch (kind_) {
        case SymKind::Jet:
            return jet(base_, nx, nt, vx_, vt_);
        case SymKind::XiDeriv:
            if (nx != 0) throw InternalInvariantViolation("xi depends on t only");
            return xi(nt);
        case SymKind::SeriesCoeff:
            return series_coeff(index_, nx, nt);
        default:
            throw InternalInvariantViolation("with_derivs on non-differentiable symbol " + name_);
    }
}

}  // namespace pt
