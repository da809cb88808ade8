#include "pt/travelling.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "pt/errors.hpp"

namespace pt {

namespace {

bool is_zeta_jet(const Symbol& s) {
    return s.kind() == SymKind::Jet && s.base() == "zeta" && s.nt() == 0;
}

bool is_frame_var(const Symbol& s) { return s.kind() == SymKind::IndepVar && s.base() == "z"; }

Symbol zeta_jet(int k) { return Symbol::jet("zeta", k, 0, 'z', 't'); }

long long concrete_power(const Factor& f) {
    auto p = f.exp.as_constant();
    if (!p) throw UnsupportedExponentForm("wave-frame calculus needs concrete powers, got " + f.exp.to_string());
    return *p;
}

// Antiderivative of one term in z, for the shapes an evolution equation
// produces: a constant multiple of z^p, of zeta^(k) with k >= 1, or of
// zeta^(k)^p * zeta^(k+1).  Returns nullopt when the term is not a total
// derivative of that form.
std::optional<Expr> integrate_term(const Term& t) {
    Expr constants{t.coeff};
    long long z_power = 0;
    std::vector<std::pair<int, long long>> jets;  // (derivative order, power)
    for (const Factor& f : t.factors) {
        if (is_zeta_jet(f.sym)) {
            auto p = f.exp.as_constant();
            if (!p) return std::nullopt;  // symbolic power: no closed pattern applies
            jets.emplace_back(f.sym.nx(), *p);
        } else if (is_frame_var(f.sym)) {
            auto p = f.exp.as_constant();
            if (!p) return std::nullopt;
            z_power = *p;
        } else if (f.sym.kind() == SymKind::IndepVar) {
            return std::nullopt;  // a stray x or t is not constant in z
        } else {
            constants = constants * Expr::sym_pow(f.sym, f.exp);
        }
    }
    std::sort(jets.begin(), jets.end());

    if (jets.empty()) {
        if (z_power < 0) return std::nullopt;
        Expr anti = constants * Expr::sym_pow(Symbol::indep("z"), ExpPoly(z_power + 1));
        return anti * Expr(GaussRational(Rational(1, z_power + 1)));
    }
    if (z_power != 0) return std::nullopt;

    if (jets.size() == 1 && jets[0].second == 1 && jets[0].first >= 1)
        return constants * Expr(zeta_jet(jets[0].first - 1));

    if (jets.size() == 2 && jets[1].first == jets[0].first + 1 && jets[1].second == 1 &&
        jets[0].second != -1) {
        long long p = jets[0].second;
        Expr anti = constants * Expr::sym_pow(zeta_jet(jets[0].first), ExpPoly(p + 1));
        return anti * Expr(GaussRational(Rational(1, p + 1)));
    }
    return std::nullopt;
}

std::optional<Expr> integrate_total(const Expr& g) {
    Expr acc;
    for (const Term& t : g.terms()) {
        auto piece = integrate_term(t);
        if (!piece) return std::nullopt;
        acc += *piece;
    }
    if (!(d_dz(acc) == g)) return std::nullopt;
    return acc;
}

}  // namespace

Expr d_dz(const Expr& e) {
    Expr out;
    for (const Term& t : e.terms()) {
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            const Factor& f = t.factors[i];
            Expr step;
            if (is_zeta_jet(f.sym))
                step = Expr(zeta_jet(f.sym.nx() + 1));
            else if (is_frame_var(f.sym))
                step = Expr(1);
            else
                continue;
            long long p = concrete_power(f);
            Expr piece{t.coeff * GaussRational(p)};
            for (std::size_t j = 0; j < t.factors.size(); ++j) {
                if (j == i) continue;
                piece = piece * Expr::sym_pow(t.factors[j].sym, t.factors[j].exp);
            }
            if (p != 1) piece = piece * Expr::sym_pow(f.sym, ExpPoly(p - 1));
            out += piece * step;
        }
    }
    return out;
}

TravellingWaveODE reduce_travelling(const PDESystem& sys, std::optional<long long> eps,
                                    std::optional<long long> mu) {
    TravellingWaveODE red;
    Expr expanded = sys.expanded(eps, mu);

    Substitution sub;
    for (const Symbol& s : expanded.symbols()) {
        if (s.kind() != SymKind::Jet || s.base() != sys.field()) continue;
        int ord = s.nx() + s.nt();
        red.order = std::max(red.order, ord);
        Expr rep{red.jet(ord)};
        if (s.nt() > 0) rep = rep * (-Expr(red.speed)).pow_int(s.nt());
        sub.map.emplace_back(s, rep);
    }
    red.ode = expanded.substitute(sub);

    if (auto direct = integrate_total(red.ode)) {
        red.first_integral = std::move(direct);
    } else {
        Expr divided = red.ode.divide_by_term(Expr(red.jet(1)));
        if (auto after = integrate_total(divided)) {
            red.first_integral = std::move(after);
            red.integrated_after_division = true;
        }
    }
    return red;
}

}  // namespace pt
