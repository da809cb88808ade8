#include "pt/sequence.hpp"

#include <algorithm>
#include <string>

namespace pt {

namespace {

GaussRational eval_exact(const Expr& e, const std::vector<std::pair<Symbol, GaussRational>>& bindings,
                         const char* what) {
    Substitution sub;
    for (const auto& [sym, val] : bindings) sub.map.emplace_back(sym, Expr(val));
    Expr r = e.substitute(sub);
    auto c = r.as_constant();
    if (!c) throw Error(std::string(what) + " needs every symbol bound; left with " + r.to_string());
    return *c;
}

}  // namespace

CoefficientSequence sequence_from_expansion(const PainleveExpansion& exp,
                                            std::vector<std::pair<Symbol, GaussRational>> bindings) {
    CoefficientSequence seq;
    seq.bindings = std::move(bindings);
    int lo = std::max(0, 2 - exp.alpha);  // smallest k with series label >= 1
    for (int k = lo; k <= exp.order && k < static_cast<int>(exp.coeffs.size()); ++k) {
        CoefficientEntry e;
        e.order = k;
        e.index = k + exp.alpha - 1;
        e.exact = exp.coeffs[k];
        e.value = eval_exact(e.exact, seq.bindings, "coefficient sequence");
        seq.entries.push_back(std::move(e));
    }
    return seq;
}

std::string convergence_name(ConvergenceVerdict v) {
    return v == ConvergenceVerdict::ConvergentIndication ? "CONVERGENT-INDICATION" : "INCONCLUSIVE";
}

RootTestResult root_test(const CoefficientSequence& seq) {
    RootTestResult r;
    for (const auto& e : seq.entries) {
        if (e.value.is_zero() || e.order <= 0) continue;
        Float150 log_norm2 = log(to_float<Float150>(e.value.norm2()));
        r.values.emplace_back(e.order, exp(log_norm2 / (2 * e.order)));
    }
    if (!r.values.empty()) r.tail = r.values.back().second;
    if (r.values.size() < 10) return r;  // too short to call

    Float150 mean_k{}, mean_v{};
    for (const auto& [k, v] : r.values) {
        mean_k += k;
        mean_v += v;
    }
    mean_k /= static_cast<int>(r.values.size());
    mean_v /= static_cast<int>(r.values.size());
    Float150 num{}, den{};
    for (const auto& [k, v] : r.values) {
        num += (k - mean_k) * (v - mean_v);
        den += (k - mean_k) * (k - mean_k);
    }
    r.trend_slope = num / den;

    // The slope of a flat sequence is pure rounding noise, so allow a sliver
    // above zero before reading the trend as growth.
    bool not_growing = r.trend_slope <= Float150(1e-30);
    if (r.tail < 1 && not_growing) r.verdict = ConvergenceVerdict::ConvergentIndication;
    return r;
}

BoundCheckReport bound_check(const CoefficientSequence& seq, int max_index, const Symbol& kappa) {
    BoundCheckReport rep;
    GaussRational kappa_val{1};
    for (const auto& [sym, val] : seq.bindings)
        if (sym == kappa) kappa_val = val;

    for (const auto& e : seq.entries) {
        int n = e.index;
        if (n < 1 || n > max_index) continue;
        BoundEntry b;
        b.index = n;
        b.nu = (3 - n % 3) % 3;
        b.block = (n + b.nu) / 3;
        if (e.exact.is_zero()) {
            b.holds = true;
            rep.entries.push_back(std::move(b));
            continue;
        }

        GammaHalf g = gamma_half(n);
        Rational two_pow{Integer(1) << (3 * b.block + 4 - b.nu)};
        b.scaled = e.exact * Expr(GaussRational(two_pow * g.factor)) *
                   Expr::sym_pow(kappa, ExpPoly(2 * b.block - 1));
        b.sqrt_pi = g.sqrt_pi;
        bool kappa_free = !b.scaled.contains(kappa);

        b.lhs_re = abs(to_float<Float150>(e.value.re()));
        b.lhs_im = abs(to_float<Float150>(e.value.im()));
        GaussRational p = eval_exact(b.scaled, seq.bindings, "coefficient bound");
        Float150 envelope = to_float<Float150>(two_pow) * gamma_half_value<Float150>(n) *
                            pow(magnitude<Float150>(kappa_val), 2 * b.block - 1);
        Float150 p_re = abs(to_float<Float150>(p.re()));
        Float150 p_im = abs(to_float<Float150>(p.im()));
        if (b.sqrt_pi) {
            Float150 spi = sqrt(pi_value<Float150>());
            p_re *= spi;
            p_im *= spi;
        }
        b.rhs_re = p_re / envelope;
        b.rhs_im = p_im / envelope;

        // Equality is the expected case, so leave room for rounding.
        Float150 slack{1e-35};
        b.holds = kappa_free && b.lhs_re <= b.rhs_re * (1 + slack) + slack &&
                  b.lhs_im <= b.rhs_im * (1 + slack) + slack;
        rep.all_hold = rep.all_hold && b.holds;
        rep.entries.push_back(std::move(b));
    }
    return rep;
}

}  // namespace pt
