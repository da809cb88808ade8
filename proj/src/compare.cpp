#include "pt/compare.hpp"

#include <cstddef>
#include <string>

#include "pt/errors.hpp"
#include "pt/ode.hpp"
#include "pt/travelling.hpp"

namespace pt {

namespace {

using F = Float150;
using C = Cplx<F>;

GaussRational eval_exact(const Expr& e, const std::vector<std::pair<Symbol, GaussRational>>& bindings) {
    Substitution sub;
    for (const auto& [sym, val] : bindings) sub.map.emplace_back(sym, Expr(val));
    Expr r = e.substitute(sub);
    auto c = r.as_constant();
    if (!c) throw Error("numeric comparison needs every parameter bound; left with " + r.to_string());
    return *c;
}

}  // namespace

CompareResult numeric_compare(const PDESystem& sys, const PainleveExpansion& exp,
                              std::optional<long long> eps, std::optional<long long> mu,
                              const std::vector<std::pair<Symbol, GaussRational>>& bindings,
                              const Rational& lo, const Rational& hi, const CompareOptions& opt) {
    if (exp.mode != AnsatzMode::Travelling)
        throw Error("numeric comparison needs a travelling-mode expansion");
    if (hi < lo) throw Error("numeric comparison window is reversed");
    F z0 = to_float<F>(lo);
    F z1 = to_float<F>(hi);
    if (z0 < F(opt.window_floor))
        throw Error("numeric comparison window starts below the floor of " +
                    std::to_string(opt.window_floor) + "; the series blows up towards z = 0");

    std::vector<C> coeff;
    coeff.reserve(exp.coeffs.size());
    for (const Expr& c : exp.coeffs) coeff.push_back(to_cplx<F>(eval_exact(c, bindings)));

    auto series_at = [&](const F& z, int deriv) {
        C acc{};
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            if (coeff[k].re == 0 && coeff[k].im == 0) continue;
            long long e = exp.alpha + static_cast<long long>(k);
            F fall{1};
            for (int j = 0; j < deriv; ++j) fall *= F(e - j);
            if (deriv > 0 && fall == 0) continue;
            acc += (fall * pow(z, static_cast<int>(e - deriv))) * coeff[k];
        }
        return acc;
    };

    CompareResult res;
    res.order = exp.order;
    res.at_z = z0;
    if (lo == hi) return res;

    TravellingWaveODE red = reduce_travelling(sys, eps, mu);
    auto constants = bindings;
    std::optional<GaussRational> speed;
    for (const auto& [sym, val] : bindings)
        if (sym == Symbol::param("omega")) speed = val;
    if (!speed) throw Error("numeric comparison needs a binding for the wave speed omega");
    constants.emplace_back(red.speed, *speed);

    auto [lead, rest] = red.ode.split_linear(red.jet(red.order));
    std::vector<Symbol> state;
    for (int k = 0; k < red.order; ++k) state.push_back(red.jet(k));
    CompiledExpr<F> clead = compile_expr<F>(lead, state, constants);
    CompiledExpr<F> crest = compile_expr<F>(rest, state, constants);
    int dim = red.order;
    auto deriv_fn = [clead, crest, dim](const std::vector<C>& y, std::vector<C>& dy) {
        for (int i = 0; i + 1 < dim; ++i) dy[i] = y[i + 1];
        dy[dim - 1] = -(crest.eval(y) / clead.eval(y));
    };

    typename MidpointExtrapolator<F>::State y0(dim);
    for (int j = 0; j < dim; ++j) y0[j] = series_at(z0, j);
    IntegrateOptions iopt;
    iopt.rtol = opt.rtol;
    MidpointExtrapolator<F> walker(deriv_fn, std::move(y0), z0, iopt);

    for (int s = 1; s <= opt.samples; ++s) {
        F zs = z0 + (z1 - z0) * s / opt.samples;
        walker.advance_to(zs);
        C ref = series_at(zs, 0);
        C diff = walker.state()[0] - ref;
        F dev = sqrt(diff.norm2() / ref.norm2());
        if (dev > res.max_rel_deviation) {
            res.max_rel_deviation = dev;
            res.at_z = zs;
        }
    }
    return res;
}

}  // namespace pt
