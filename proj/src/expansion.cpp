#include "pt/expansion.hpp"

#include <algorithm>

namespace pt {

namespace {

// Value of a phi-jet under the restricted ansatz phi = x - xi(t), with
// xi = omega t in travelling mode.  Everything except phi itself collapses.
std::optional<Expr> phi_jet_value(const Symbol& s, AnsatzMode mode) {
    if (mode == AnsatzMode::General) return std::nullopt;
    if (s.kind() != SymKind::Jet || s.base() != "phi") return std::nullopt;
    if (s.nx() == 0 && s.nt() == 0) return std::nullopt;
    if (s.nx() == 1 && s.nt() == 0) return Expr(1);
    if (s.nx() == 0) {
        if (mode == AnsatzMode::Travelling)
            return s.nt() == 1 ? Expr(-1) * Expr(Symbol::param("omega")) : Expr(0);
        return Expr(-1) * Expr(Symbol::xi(s.nt()));
    }
    return Expr(0);
}

Expr adapt_to_mode(const Expr& e, AnsatzMode mode) {
    Substitution sub;
    for (const auto& s : e.symbols()) {
        auto v = phi_jet_value(s, mode);
        if (v) sub.map.push_back({s, *v});
    }
    if (sub.map.empty()) return e;
    return e.substitute(sub);
}

}  // namespace

PhiSeries PainleveExpansion::series() const {
    PhiSeries s = PhiSeries::monomial(alpha, coeffs.empty() ? Expr() : coeffs[0]);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        s.add(PhiSeries::monomial(alpha + static_cast<int>(k), coeffs[k]));
    return s;
}

PainleveExpansion expand(const PDESystem& sys, const BalanceResult& bal,
                         const ResonanceReport& rep, const ExpansionOptions& opt) {
    std::map<ExpVar, long long> vals;
    if (opt.eps) vals[ExpVar::Eps] = *opt.eps;
    if (opt.mu) vals[ExpVar::Mu] = *opt.mu;
    auto s0 = bal.leading_exponent.eval_partial(vals).as_constant();
    if (!s0) throw UnsupportedBalance("expansion needs concrete exponent values");

    std::vector<int> resonances;
    for (long long r : rep.integer_roots)
        if (r >= 1) resonances.push_back(static_cast<int>(r));

    int N = opt.order;
    for (int r : resonances) N = std::max(N, r);

    SeriesContext ctx;
    ctx.mode = opt.mode;
    ctx.field = sys.field();

    PainleveExpansion out;
    out.mode = opt.mode;
    out.alpha = bal.alpha;
    out.base_exponent = *s0;

    Expr pde = sys.expanded(opt.eps, opt.mu);
    Expr lam0 = adapt_to_mode(bal.lambda0.eval_exponents(vals), opt.mode);
    out.coeffs.push_back(lam0);
    PhiSeries u = PhiSeries::monomial(bal.alpha, lam0);

    for (int k = 1; k <= N; ++k) {
        const Symbol unknown = Symbol::series_coeff(k);
        PhiSeries trial = u;
        trial.add(PhiSeries::monomial(bal.alpha + k, Expr(unknown)));
        int target = static_cast<int>(*s0) + k;
        Expr eq =
            evaluate_pde_on_series(pde, sys.field(), trial, ctx, target).at_exponent(target);
        auto [g, f] = eq.split_linear(unknown);
        for (const auto& fs : f.symbols())
            if (fs.kind() == SymKind::SeriesCoeff && fs.index() == k)
                throw InternalInvariantViolation(
                    "derivative of the unknown coefficient reached its own defining order");

        Expr lam;
        if (std::count(resonances.begin(), resonances.end(), k) > 0) {
            if (!g.is_zero())
                throw InternalInvariantViolation("nonzero pivot at declared resonance " +
                                                 std::to_string(k));
            CompatRecord rec;
            rec.index = k;
            rec.residual = f;
            rec.compatible = f.is_zero();
            auto it = opt.bind.find(k);
            rec.bound = it != opt.bind.end();
            out.compat.push_back(rec);
            if (!rec.compatible) {
                out.aborted = true;
                out.order = k - 1;
                return out;
            }
            if (rec.bound) {
                lam = adapt_to_mode(it->second, opt.mode);
            } else {
                lam = Expr(unknown);
                out.free_params.push_back(k);
            }
        } else {
            if (g.is_zero())
                throw InternalInvariantViolation(
                    "vanishing pivot off the resonance set at order " + std::to_string(k));
            lam = Expr(-1) * f.divide_by_term(g);
        }
        out.coeffs.push_back(lam);
        u.add(PhiSeries::monomial(bal.alpha + k, lam));
    }
    out.order = N;
    return out;
}

PhiSeries expansion_residual(const PDESystem& sys, const PainleveExpansion& exp,
                             std::optional<long long> eps, std::optional<long long> mu,
                             int extra) {
    SeriesContext ctx;
    ctx.mode = exp.mode;
    ctx.field = sys.field();
    int cut = static_cast<int>(exp.base_exponent) + exp.order + extra;
    return evaluate_pde_on_series(sys.expanded(eps, mu), sys.field(), exp.series(), ctx, cut);
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Passes: return "PASSES";
        case Classification::Defective: return "DEFECTIVE";
        case Classification::Fails: return "FAILS";
    }
    return "FAILS";
}

PainleveVerdict classify(const PDESystem& sys, const BalanceResult&,
                         const PainleveExpansion& exp, const ResonanceReport& rep) {
    PainleveVerdict v;
    for (const auto& c : exp.compat) {
        if (c.compatible) continue;
        v.cls = Classification::Fails;
        v.justification = "compatibility fails at resonance " + std::to_string(c.index) +
                          ": residual " + c.residual.to_string();
        return v;
    }

    std::string orders;
    for (const auto& c : exp.compat) orders += (orders.empty() ? "" : ",") + std::to_string(c.index);
    std::size_t params = exp.compat.size() + 1;  // singular surface counts once
    std::size_t eq_order = static_cast<std::size_t>(sys.order());
    if (params > eq_order)
        throw InternalInvariantViolation("more free parameters than the equation order");
    if (params == eq_order) {
        v.cls = Classification::Passes;
        v.justification = "arbitrary singular surface plus free coefficients at orders {" +
                          orders + "} give " + std::to_string(params) +
                          " parameters, matching the equation order";
        return v;
    }
    v.cls = Classification::Defective;
    v.justification = "series exists but supplies only " + std::to_string(params) + " of " +
                      std::to_string(eq_order) + " parameters";
    if (rep.quadratic() && !rep.quadratic()->square_disc)
        v.justification += "; the remaining resonance pair is irrational";
    return v;
}

}  // namespace pt
