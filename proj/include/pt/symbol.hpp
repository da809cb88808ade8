#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pt/errors.hpp"
#include "pt/exponent.hpp"

namespace pt {

enum class SymKind : std::uint8_t {
    IndepVar,     // x, t (or z for travelling-frame work)
    Param,        // named constants: kappa, omega, v, ...
    ExpSym,       // eps, mu, alpha, r used as ordinary factors
    Jet,          // derivative of a field: u_x, phi_2xt, zeta_3z, ...
    XiDeriv,      // xi(t) and its t-derivatives: xi, xi_t, xi_2t, ...
    SeriesCoeff,  // expansion coefficient lambda<k>, possibly differentiated
    Probe,        // the resonance probe amplitude theta
    ImagUnit,     // the imaginary unit when raised to a symbolic power
};

// Differentiation semantics for coefficient functions.  General keeps full
// (x, t) dependence; Reduced treats series coefficients as functions of t
// alone (the x-independent gauge where phi = x - xi(t)); Travelling treats
// them as constants (phi = x - omega*t).
enum class DiffMode : std::uint8_t { General, Reduced, Travelling };

enum class Var : std::uint8_t { X, T };

// Immutable interned-by-value symbol.  Identity is the full field tuple; the
// printable name is derived deterministically from it.
class Symbol {
public:
    Symbol() = default;

    static Symbol indep(std::string name);
    static Symbol param(std::string name);
    static Symbol exp_sym(ExpVar v);
    static Symbol jet(std::string base, int nx, int nt, char vx = 'x', char vt = 't');
    static Symbol xi(int order);
    static Symbol series_coeff(int index, int nx = 0, int nt = 0);
    static Symbol probe();
    static Symbol imag_unit();

    SymKind kind() const { return kind_; }
    const std::string& base() const { return base_; }
    int nx() const { return nx_; }
    int nt() const { return nt_; }
    int index() const { return index_; }
    char var_x() const { return vx_; }
    char var_t() const { return vt_; }
    ExpVar exp_var() const;

    const std::string& name() const { return name_; }

    // Same symbol family, derivative counts raised.  Only meaningful for the
    // differentiable kinds (Jet, XiDeriv, SeriesCoeff).
    Symbol with_derivs(int nx, int nt) const;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind_ == b.kind_ && a.name_ == b.name_;
    }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
    friend bool operator<(const Symbol& a, const Symbol& b) {
        if (a.name_ != b.name_) return a.name_ < b.name_;
        return a.kind_ < b.kind_;
    }

    std::size_t hash() const { return std::hash<std::string>{}(name_); }

private:
    SymKind kind_ = SymKind::Param;
    std::string base_;
    int nx_ = 0, nt_ = 0;
    int index_ = 0;
    char vx_ = 'x', vt_ = 't';
    std::string name_;

    void rebuild_name();
};

}  // namespace pt
