#pragma once

#include <string>
#include <vector>

#include "pt/expr.hpp"

namespace pt {

// Shape of the singular manifold in the expansion u = sum lambda_k phi^(alpha+k).
//   General:    phi(x, t) arbitrary, coefficients lambda_k(x, t)
//   Reduced:    phi = x - xi(t), coefficients lambda_k(t)
//   Travelling: phi = x - omega*t, constant coefficients
enum class AnsatzMode { General, Reduced, Travelling };

const char* ansatz_name(AnsatzMode m);

struct SeriesContext {
    AnsatzMode mode = AnsatzMode::Reduced;
    std::string field = "u";
    Symbol phi = Symbol::jet("phi", 0, 0);

    DiffMode dmode() const;
    Expr phi_x() const;  // General: the jet phi_x; otherwise 1
    Expr phi_t() const;  // General: phi_t; Reduced: -xi_t; Travelling: -omega
};

// Finite segment of a phi-series: sum_{k} coeff[k] * phi^(base+k), with
// coefficients in the mode's function ring.  phi itself never appears inside
// a coefficient; its derivatives enter through the context.
class PhiSeries {
public:
    PhiSeries() = default;
    PhiSeries(int base, std::vector<Expr> coeffs);

    static PhiSeries monomial(int exponent, Expr coeff);

    int base() const { return base_; }
    int length() const { return static_cast<int>(coeffs_.size()); }
    int max_exponent() const { return base_ + length() - 1; }
    const std::vector<Expr>& coeffs() const { return coeffs_; }

    // Coefficient of phi^e; zero outside the stored window.
    const Expr& at_exponent(int e) const;

    PhiSeries diff_x(const SeriesContext& ctx) const;
    PhiSeries diff_t(const SeriesContext& ctx) const;

    PhiSeries& add(const PhiSeries& other);
    static PhiSeries mul(const PhiSeries& a, const PhiSeries& b, int max_exp);
    PhiSeries pow_int(int k, int max_exp) const;
    PhiSeries scaled(const Expr& scalar) const;
    PhiSeries truncated(int max_exp) const;

    // Smallest exponent with a nonzero coefficient; nullopt for the zero series.
    std::optional<int> min_nonzero_exponent() const;

private:
    int base_ = 0;
    std::vector<Expr> coeffs_;
};

// Substitute the series for every jet of `field` in a concrete-exponent jet
// expression and expand, truncating above max_exp.  Non-field factors
// multiply into the coefficients unchanged.
PhiSeries evaluate_pde_on_series(const Expr& pde, const std::string& field, const PhiSeries& u,
                                 const SeriesContext& ctx, int max_exp);

}  // namespace pt
