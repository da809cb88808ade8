#include "pt/balance.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "pt/polyfit.hpp"
#include "pt/series.hpp"

namespace pt {

std::map<ExpVar, long long> BalanceConstraint::tie(long long free_value) const {
    switch (kind) {
        case Kind::EpsEquals: return {{ExpVar::Eps, value}, {ExpVar::Mu, free_value}};
        case Kind::MuEquals: return {{ExpVar::Eps, free_value}, {ExpVar::Mu, value}};
        case Kind::EpsMinusMu:
            return {{ExpVar::Eps, free_value}, {ExpVar::Mu, free_value - value}};
    }
    return {};
}

long long BalanceConstraint::min_free_value() const {
    switch (kind) {
        case Kind::EpsEquals:
        case Kind::MuEquals:
            return 1;
        case Kind::EpsMinusMu:
            return std::max<long long>(1, value + 1);  // keeps mu = eps - value >= 1
    }
    return 1;
}

std::string BalanceConstraint::to_string() const {
    switch (kind) {
        case Kind::EpsEquals: return "eps=" + std::to_string(value);
        case Kind::MuEquals: return "mu=" + std::to_string(value);
        case Kind::EpsMinusMu:
            if (value == 0) return "eps=mu";
            if (value > 0) return "eps=mu+" + std::to_string(value);
            return "mu=eps+" + std::to_string(-value);
    }
    return "?";
}

namespace {

const Symbol kLam0 = Symbol::series_coeff(0);

// Control-flow marker: the leading-order equation admits only lambda0 = 0,
// so the structural balance is spurious and the candidate is dropped.
struct NoNonzeroRoot {};

// Solve the leading-order coefficient equation E(lambda0) = 0 for its nonzero
// root.  E must factor as lambda0^m (g lambda0 + f); a longer power gap would
// need radicals, which is outside the supported fragment.
Expr solve_leading_coefficient(const Expr& equation) {
    if (equation.is_zero())
        throw UnsupportedBalance("leading order vanishes for every coefficient");
    std::vector<std::pair<long long, Expr>> powers;
    for (const auto& [e, val] : equation.collect_powers(kLam0)) {
        auto c = e.as_constant();
        if (!c) throw InternalInvariantViolation("symbolic power of lambda0");
        powers.push_back({*c, val});
    }
    std::sort(powers.begin(), powers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (powers.size() == 1) throw NoNonzeroRoot{};
    if (powers.size() != 2 || powers[1].first != powers[0].first + 1)
        throw UnsupportedBalance(
            "leading-order equation is not linear after removing the zero root");
    Expr lam0;
    try {
        lam0 = -powers[0].second.divide_by_term(powers[1].second);
    } catch (const UnsupportedExponentForm&) {
        throw UnsupportedBalance("leading-order coefficient ratio is not a monomial");
    }
    if (!equation.substitute(kLam0, lam0).is_zero())
        throw InternalInvariantViolation("leading coefficient root fails verification");
    return lam0;
}

// Affine decomposition exp = a * alpha + b with a, b free of alpha.
struct AffineInAlpha {
    ExpPoly a;
    ExpPoly b;
};

AffineInAlpha split_alpha(const ExpPoly& e) {
    AffineInAlpha out;
    out.b = e.eval_partial({{ExpVar::Alpha, 0}});
    out.a = e.eval_partial({{ExpVar::Alpha, 1}}) - out.b;
    if ((out.a * ExpPoly::var(ExpVar::Alpha) + out.b) != e)
        throw InternalInvariantViolation("term exponent is not affine in alpha");
    return out;
}

std::optional<long long> lookup(const std::map<ExpVar, long long>& vals, ExpVar v) {
    auto it = vals.find(v);
    if (it == vals.end()) return std::nullopt;
    return it->second;
}

// Leading coefficient equation at phi^s, as a polynomial in the placeholder
// lambda0.  Exponent values must cover whatever the system leaves symbolic.
Expr leading_equation(const PDESystem& sys, const std::map<ExpVar, long long>& vals, int alpha,
                      long long s) {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::General;
    ctx.field = sys.field();
    PhiSeries u0 = PhiSeries::monomial(alpha, Expr(kLam0));
    Expr pde = sys.expanded(lookup(vals, ExpVar::Eps), lookup(vals, ExpVar::Mu));
    return evaluate_pde_on_series(pde, sys.field(), u0, ctx, static_cast<int>(s))
        .at_exponent(static_cast<int>(s));
}

// ---------------------------------------------------------------------------
// Concrete exponents: plain integer arithmetic over term pairs.

struct ConcreteCandidate {
    int alpha;
    long long exponent;
    std::vector<std::size_t> leading;
};

std::vector<ConcreteCandidate> concrete_candidates(const std::vector<ExpPoly>& exps) {
    std::vector<std::pair<long long, long long>> ab;
    for (const auto& e : exps) {
        auto s = split_alpha(e);
        ab.push_back({s.a.constant_value(), s.b.constant_value()});
    }
    std::vector<ConcreteCandidate> out;
    std::set<long long> seen;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        for (std::size_t j = i + 1; j < ab.size(); ++j) {
            long long da = ab[i].first - ab[j].first;
            long long db = ab[j].second - ab[i].second;
            if (da == 0 || db % da != 0) continue;
            long long alpha = db / da;
            if (alpha >= 0 || !seen.insert(alpha).second) continue;

            long long s = ab[i].first * alpha + ab[i].second;
            bool minimal = true;
            std::vector<std::size_t> leading;
            for (std::size_t k = 0; k < ab.size(); ++k) {
                long long v = ab[k].first * alpha + ab[k].second;
                if (v < s) {
                    minimal = false;
                    break;
                }
                if (v == s) leading.push_back(k);
            }
            if (!minimal || leading.size() < 2) continue;
            out.push_back({static_cast<int>(alpha), s, std::move(leading)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.alpha > b.alpha; });
    return out;
}

std::vector<BalanceResult> concrete_balances(const PDESystem& sys,
                                             const std::map<ExpVar, long long>& vals,
                                             const std::vector<ExpPoly>& exps) {
    std::vector<BalanceResult> out;
    for (const auto& cand : concrete_candidates(exps)) {
        BalanceResult r;
        try {
            r.lambda0 = solve_leading_coefficient(
                leading_equation(sys, vals, cand.alpha, cand.exponent));
        } catch (const NoNonzeroRoot&) {
            continue;
        }
        r.alpha = cand.alpha;
        r.leading_exponent = ExpPoly(cand.exponent);
        r.leading_terms = cand.leading;
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic exponents: divisor analysis of the balance condition.

struct GenericCandidate {
    int alpha;
    std::optional<BalanceConstraint> constraint;
    ExpPoly leading_exponent;  // constraint already applied
    std::vector<std::size_t> leading;
};

ExpPoly apply_constraint(const ExpPoly& e, const std::optional<BalanceConstraint>& c) {
    if (!c) return e;
    switch (c->kind) {
        case BalanceConstraint::Kind::EpsEquals:
            return e.eval_partial({{ExpVar::Eps, c->value}});
        case BalanceConstraint::Kind::MuEquals:
            return e.eval_partial({{ExpVar::Mu, c->value}});
        case BalanceConstraint::Kind::EpsMinusMu:
            return e.subst_var(ExpVar::Mu, ExpPoly::var(ExpVar::Eps) - ExpPoly(c->value));
    }
    return e;
}

std::vector<GenericCandidate> generic_candidates(const std::vector<ExpPoly>& exps) {
    std::vector<AffineInAlpha> split;
    for (const auto& e : exps) split.push_back(split_alpha(e));

    std::vector<GenericCandidate> out;
    auto already = [&](int alpha, const std::optional<BalanceConstraint>& c) {
        return std::any_of(out.begin(), out.end(), [&](const GenericCandidate& g) {
            return g.alpha == alpha && g.constraint == c;
        });
    };

    const std::size_t n = split.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Balance condition between terms i and j: E * alpha = F.
            ExpPoly E = split[i].a - split[j].a;
            ExpPoly F = split[j].b - split[i].b;
            if (E.is_zero()) continue;  // equal slopes never determine alpha
            if (E.degree() > 1 || F.degree() > 1)
                throw UnsupportedBalance("balance condition is nonlinear in the exponents");

            std::vector<std::pair<int, std::optional<BalanceConstraint>>> found;
            auto admit = [&](long long alpha, std::optional<BalanceConstraint> c) {
                if (alpha <= -1) found.push_back({static_cast<int>(alpha), std::move(c)});
            };

            if (auto ec = E.as_constant()) {
                auto fc = F.as_constant();
                if (!fc)
                    throw UnsupportedBalance(
                        "balance condition has constant slope but exponent-dependent "
                        "offset; no finite candidate set");
                if (*fc % *ec == 0) admit(*fc / *ec, std::nullopt);
            } else {
                // Reduce to one variable s and run the divisor analysis.
                long long ee = E.linear_coeff(ExpVar::Eps), em = E.linear_coeff(ExpVar::Mu);
                long long fe = F.linear_coeff(ExpVar::Eps), fm = F.linear_coeff(ExpVar::Mu);
                BalanceConstraint::Kind kind;
                long long a, c, s_min;
                if (em == 0 && fm == 0) {
                    kind = BalanceConstraint::Kind::EpsEquals;
                    a = ee, c = fe, s_min = 1;
                } else if (ee == 0 && fe == 0) {
                    kind = BalanceConstraint::Kind::MuEquals;
                    a = em, c = fm, s_min = 1;
                } else if (ee == -em && fe == -fm) {
                    kind = BalanceConstraint::Kind::EpsMinusMu;
                    a = ee, c = fe;
                    s_min = std::numeric_limits<long long>::min() / 2;
                } else {
                    throw UnsupportedBalance(
                        "balance condition couples the exponents beyond their difference");
                }
                if (a == 0)
                    throw UnsupportedBalance("balance condition degenerates; alpha unbounded");
                auto sols =
                    divisor_quotients(a, E.constant_term(), c, F.constant_term(), s_min);
                if (sols.constant_quotient) admit(*sols.constant_quotient, std::nullopt);
                for (auto [s, alpha] : sols.at) admit(alpha, BalanceConstraint{kind, s});
            }

            for (auto& [alpha, constraint] : found) {
                if (already(alpha, constraint)) continue;
                ExpPoly s_exp =
                    apply_constraint(split[i].a * ExpPoly(alpha) + split[i].b, constraint);
                // With eps = mu + v, v > 0, the valid domain starts at eps =
                // v + 1; shift so the comparison oracle's eps >= 1 premise
                // matches the actual domain.
                long long shift = 0;
                if (constraint && constraint->kind == BalanceConstraint::Kind::EpsMinusMu)
                    shift = std::max<long long>(0, constraint->value);
                auto domain = [&](const ExpPoly& p) {
                    if (shift == 0) return p;
                    return p.subst_var(ExpVar::Eps,
                                       ExpPoly::var(ExpVar::Eps) + ExpPoly(shift));
                };
                ExpPoly s_dom = domain(s_exp);
                bool minimal = true;
                std::vector<std::size_t> leading;
                for (std::size_t k = 0; k < n; ++k) {
                    ExpPoly ek = domain(
                        apply_constraint(split[k].a * ExpPoly(alpha) + split[k].b, constraint));
                    auto cmp = exp_try_compare(ek, s_dom);
                    if (!cmp || *cmp < 0) {
                        minimal = false;
                        break;
                    }
                    if (*cmp == 0) leading.push_back(k);
                }
                if (!minimal || leading.size() < 2) continue;
                out.push_back({alpha, constraint, s_exp, std::move(leading)});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.alpha > b.alpha; });
    return out;
}

// ---------------------------------------------------------------------------
// Reconstruction of a symbolic lambda0 from exact concrete instances.

struct MonomialShape {
    GaussRational scalar;
    std::vector<Factor> factors;
};

MonomialShape shape_of(const Expr& e) {
    if (!e.is_single_term())
        throw UnsupportedBalance("leading coefficient is not a monomial");
    return {e.terms()[0].coeff, e.terms()[0].factors};
}

Expr rebuild(const std::vector<Factor>& shape, const std::vector<GaussRational>& coeffs,
             ExpVar var) {
    Expr base(GaussRational(1));
    for (const auto& f : shape) base *= Expr::sym_pow(f.sym, f.exp);
    Expr out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Expr term = Expr(coeffs[k]) * base;
        if (k > 0)
            term *= Expr::sym_pow(Symbol::exp_sym(var), ExpPoly(static_cast<long long>(k)));
        out += term;
    }
    return out;
}

class Lambda0Builder {
public:
    Lambda0Builder(const PDESystem& sys, const std::map<ExpVar, long long>& fixed,
                   const std::set<ExpVar>& sym_vars, const GenericCandidate& cand)
        : sys_(sys), fixed_(fixed), sym_vars_(sym_vars), cand_(cand) {}

    Expr build() {
        if (cand_.constraint && cand_.constraint->kind == BalanceConstraint::Kind::EpsMinusMu)
            return fit_axis(ExpVar::Eps, cand_.constraint->min_free_value(), 0, false);

        std::vector<ExpVar> free_vars;
        for (ExpVar v : {ExpVar::Eps, ExpVar::Mu}) {
            if (!sym_vars_.count(v)) continue;
            if (cand_.constraint && pinned_var() == v) continue;
            free_vars.push_back(v);
        }
        if (free_vars.empty()) return instance(assemble(std::nullopt, 0, 0));
        if (free_vars.size() == 1) return fit_axis(free_vars[0], 1, 1, false);

        // Two free exponents: accept a coefficient depending on one of them
        // alone.  Anything genuinely bivariate is outside the fragment.
        try {
            return fit_axis(ExpVar::Eps, 1, 1, true);
        } catch (const UnsupportedBalance&) {
        }
        try {
            return fit_axis(ExpVar::Mu, 1, 1, true);
        } catch (const UnsupportedBalance&) {
        }
        throw UnsupportedBalance("leading coefficient depends on both exponents");
    }

private:
    std::optional<ExpVar> pinned_var() const {
        if (!cand_.constraint) return std::nullopt;
        switch (cand_.constraint->kind) {
            case BalanceConstraint::Kind::EpsEquals: return ExpVar::Eps;
            case BalanceConstraint::Kind::MuEquals: return ExpVar::Mu;
            case BalanceConstraint::Kind::EpsMinusMu: return std::nullopt;
        }
        return std::nullopt;
    }

    std::map<ExpVar, long long> assemble(std::optional<ExpVar> axis, long long v,
                                         long long other) const {
        std::map<ExpVar, long long> vals = fixed_;
        if (cand_.constraint) {
            switch (cand_.constraint->kind) {
                case BalanceConstraint::Kind::EpsEquals:
                    vals.emplace(ExpVar::Eps, cand_.constraint->value);
                    break;
                case BalanceConstraint::Kind::MuEquals:
                    vals.emplace(ExpVar::Mu, cand_.constraint->value);
                    break;
                case BalanceConstraint::Kind::EpsMinusMu:
                    vals.emplace(ExpVar::Eps, v);
                    vals.emplace(ExpVar::Mu, v - cand_.constraint->value);
                    break;
            }
        }
        for (ExpVar x : {ExpVar::Eps, ExpVar::Mu}) {
            if (sym_vars_.count(x) && !vals.count(x))
                vals.emplace(x, (!axis || *axis == x) ? v : other);
        }
        return vals;
    }

    Expr instance(const std::map<ExpVar, long long>& vals) const {
        long long s = cand_.leading_exponent.eval_partial(vals).constant_value();
        return solve_leading_coefficient(leading_equation(sys_, vals, cand_.alpha, s));
    }

    // Fit the coefficient as a polynomial in `var` along one sampling line,
    // verify on extra points, and when `cross_check` is set confirm it does
    // not move with the other exponent.
    Expr fit_axis(ExpVar var, long long start, long long other, bool cross_check) const {
        const long long kSamples = 6, kVerify = 2;
        std::optional<std::vector<Factor>> shape;
        std::vector<std::pair<long long, GaussRational>> pts;
        auto sample = [&](long long v, long long o) {
            MonomialShape m = shape_of(instance(assemble(var, v, o)));
            if (!shape)
                shape = m.factors;
            else if (!(*shape == m.factors))
                throw UnsupportedBalance(
                    "leading coefficient changes shape across exponent values");
            return m.scalar;
        };
        for (long long v = start; v < start + kSamples; ++v)
            pts.push_back({v, sample(v, other)});
        auto coeffs = fit_polynomial(pts);
        for (long long v = start + kSamples; v < start + kSamples + kVerify; ++v) {
            if (!(sample(v, other) == eval_polynomial(coeffs, v)))
                throw UnsupportedBalance(
                    "leading coefficient is not polynomial in the exponent");
        }
        if (cross_check) {
            for (long long v = start; v < start + 3; ++v) {
                if (!(sample(v, other + 1) == eval_polynomial(coeffs, v)) ||
                    !(sample(v, other + 2) == eval_polynomial(coeffs, v)))
                    throw UnsupportedBalance(
                        "leading coefficient moves with the second exponent");
            }
        }
        return rebuild(*shape, coeffs, var);
    }

    const PDESystem& sys_;
    const std::map<ExpVar, long long>& fixed_;
    const std::set<ExpVar>& sym_vars_;
    const GenericCandidate& cand_;
};

std::vector<BalanceResult> generic_balances(const PDESystem& sys,
                                            const std::map<ExpVar, long long>& fixed,
                                            const std::vector<ExpPoly>& exps) {
    std::set<ExpVar> sym_vars;
    for (const auto& e : exps) {
        for (ExpVar v : {ExpVar::Eps, ExpVar::Mu})
            if (e.depends_on(v)) sym_vars.insert(v);
    }
    std::vector<BalanceResult> out;
    for (const auto& cand : generic_candidates(exps)) {
        BalanceResult r;
        try {
            r.lambda0 = Lambda0Builder(sys, fixed, sym_vars, cand).build();
        } catch (const NoNonzeroRoot&) {
            continue;
        }
        r.alpha = cand.alpha;
        r.constraint = cand.constraint;
        r.leading_exponent = cand.leading_exponent;
        r.leading_terms = cand.leading;
        r.generic = true;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<BalanceResult> dominant_balances(const PDESystem& sys, std::optional<long long> eps,
                                             std::optional<long long> mu) {
    std::map<ExpVar, long long> fixed;
    if (eps) fixed[ExpVar::Eps] = *eps;
    if (mu) fixed[ExpVar::Mu] = *mu;

    std::vector<ExpPoly> exps;
    bool symbolic = false;
    for (const auto& e : sys.leading_exponents()) {
        ExpPoly r = e.eval_partial(fixed);
        symbolic = symbolic || r.depends_on(ExpVar::Eps) || r.depends_on(ExpVar::Mu);
        exps.push_back(std::move(r));
    }
    if (symbolic) return generic_balances(sys, fixed, exps);
    return concrete_balances(sys, fixed, exps);
}

}  // namespace pt
