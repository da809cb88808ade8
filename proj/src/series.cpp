#include "pt/series.hpp"

#include <functional>
#include <map>

namespace pt {

const char* ansatz_name(AnsatzMode m) {
    switch (m) {
        case AnsatzMode::General: return "general";
        case AnsatzMode::Reduced: return "reduced";
        case AnsatzMode::Travelling: return "travelling";
    }
    return "?";
}

DiffMode SeriesContext::dmode() const {
    switch (mode) {
        case AnsatzMode::General: return DiffMode::General;
        case AnsatzMode::Reduced: return DiffMode::Reduced;
        case AnsatzMode::Travelling: return DiffMode::Travelling;
    }
    return DiffMode::General;
}

Expr SeriesContext::phi_x() const {
    return mode == AnsatzMode::General ? Expr(Symbol::jet("phi", 1, 0)) : Expr(1);
}

Expr SeriesContext::phi_t() const {
    switch (mode) {
        case AnsatzMode::General: return Expr(Symbol::jet("phi", 0, 1));
        case AnsatzMode::Reduced: return -Expr(Symbol::xi(1));
        case AnsatzMode::Travelling: return -Expr(Symbol::param("omega"));
    }
    return Expr();
}

PhiSeries::PhiSeries(int base, std::vector<Expr> coeffs)
    : base_(base), coeffs_(std::move(coeffs)) {}

PhiSeries PhiSeries::monomial(int exponent, Expr coeff) {
    return PhiSeries(exponent, {std::move(coeff)});
}

const Expr& PhiSeries::at_exponent(int e) const {
    static const Expr zero;
    int k = e - base_;
    if (k < 0 || k >= length()) return zero;
    return coeffs_[k];
}

PhiSeries PhiSeries::diff_x(const SeriesContext& ctx) const {
    // (c phi^e)' = e c phi_x phi^(e-1) + c' phi^e
    Expr px = ctx.phi_x();
    DiffMode dm = ctx.dmode();
    std::vector<Expr> out(coeffs_.size() + 1);
    for (int k = 0; k < length(); ++k) {
        long long e = base_ + k;
        if (e != 0) out[k] += Expr(e) * px * coeffs_[k];
        out[k + 1] += coeffs_[k].differentiate(Var::X, dm);
    }
    return PhiSeries(base_ - 1, std::move(out));
}

PhiSeries PhiSeries::diff_t(const SeriesContext& ctx) const {
    Expr pt_ = ctx.phi_t();
    DiffMode dm = ctx.dmode();
    std::vector<Expr> out(coeffs_.size() + 1);
    for (int k = 0; k < length(); ++k) {
        long long e = base_ + k;
        if (e != 0) out[k] += Expr(e) * pt_ * coeffs_[k];
        out[k + 1] += coeffs_[k].differentiate(Var::T, dm);
    }
    return PhiSeries(base_ - 1, std::move(out));
}

PhiSeries& PhiSeries::add(const PhiSeries& other) {
    if (other.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        *this = other;
        return *this;
    }
    int lo = std::min(base_, other.base_);
    int hi = std::max(max_exponent(), other.max_exponent());
    std::vector<Expr> out(hi - lo + 1);
    for (int k = 0; k < length(); ++k) out[base_ - lo + k] += coeffs_[k];
    for (int k = 0; k < other.length(); ++k) out[other.base_ - lo + k] += other.coeffs_[k];
    base_ = lo;
    coeffs_ = std::move(out);
    return *this;
}

PhiSeries PhiSeries::mul(const PhiSeries& a, const PhiSeries& b, int max_exp) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return PhiSeries();
    int base = a.base_ + b.base_;
    int len = std::min(a.length() + b.length() - 1, max_exp - base + 1);
    if (len <= 0) return PhiSeries();
    std::vector<Expr> out(len);
    for (int i = 0; i < a.length(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; j < b.length() && i + j < len; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PhiSeries(base, std::move(out));
}

PhiSeries PhiSeries::pow_int(int k, int max_exp) const {
    if (k < 0) throw UnsupportedExponentForm("negative power of a series");
    PhiSeries acc = monomial(0, Expr(1));
    // The copies still to be multiplied in contribute at least (k-1-n)*base_,
    // so partial products may only be cut that far above the final bound.
    for (int n = 0; n < k; ++n) acc = mul(acc, *this, max_exp - (k - 1 - n) * base_);
    return acc;
}

PhiSeries PhiSeries::scaled(const Expr& scalar) const {
    PhiSeries out = *this;
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

PhiSeries PhiSeries::truncated(int max_exp) const {
    if (coeffs_.empty() || max_exponent() <= max_exp) return *this;
    int len = max_exp - base_ + 1;
    if (len <= 0) return PhiSeries();
    return PhiSeries(base_, std::vector<Expr>(coeffs_.begin(), coeffs_.begin() + len));
}

std::optional<int> PhiSeries::min_nonzero_exponent() const {
    for (int k = 0; k < length(); ++k)
        if (!coeffs_[k].is_zero()) return base_ + k;
    return std::nullopt;
}

PhiSeries evaluate_pde_on_series(const Expr& pde, const std::string& field, const PhiSeries& u,
                                 const SeriesContext& ctx, int max_exp) {
    // Derivative series are shared across terms.
    std::map<std::pair<int, int>, PhiSeries> jets;
    jets[{0, 0}] = u;
    std::function<const PhiSeries&(int, int)> jet = [&](int nx, int nt) -> const PhiSeries& {
        auto it = jets.find({nx, nt});
        if (it != jets.end()) return it->second;
        const PhiSeries& lower = nt > 0 ? jet(nx, nt - 1) : jet(nx - 1, 0);
        PhiSeries d = nt > 0 ? lower.diff_t(ctx) : lower.diff_x(ctx);
        return jets.emplace(std::pair{nx, nt}, std::move(d)).first->second;
    };

    PhiSeries result;
    for (const Term& t : pde.terms()) {
        Expr scalar{t.coeff};
        std::vector<std::pair<const PhiSeries*, int>> factors;
        for (const Factor& f : t.factors) {
            if (f.sym.kind() == SymKind::Jet && f.sym.base() == field) {
                auto p = f.exp.as_constant();
                if (!p || *p < 0)
                    throw UnsupportedExponentForm(
                        "series evaluation needs constant nonnegative powers of " +
                        f.sym.name());
                factors.push_back({&jet(f.sym.nx(), f.sym.nt()), static_cast<int>(*p)});
            } else {
                scalar *= Expr::sym_pow(f.sym, f.exp);
            }
        }
        // Factors still to be folded in can push exponents down by their
        // base; cut partial products no lower than the remaining headroom.
        int rest = 0;
        for (const auto& [s, p] : factors) rest += p * s->base();
        PhiSeries prod = PhiSeries::monomial(0, Expr(1));
        for (const auto& [s, p] : factors) {
            rest -= p * s->base();
            prod = PhiSeries::mul(prod, s->pow_int(p, max_exp - prod.base() - rest),
                                  max_exp - rest);
        }
        result.add(prod.scaled(scalar));
    }
    return result.truncated(max_exp);
}

}  // namespace pt
