#include "pt/expr.hpp"

#include <algorithm>
#include <functional>

namespace pt {

namespace {

int cmp_factor(const Factor& a, const Factor& b) {
    if (a.sym != b.sym) return a.sym < b.sym ? -1 : 1;
    return a.exp.cmp_structural(b.exp);
}

int cmp_factor_lists(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = cmp_factor(a[k], b[k]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace

struct TermLess {
    bool operator()(const Term& a, const Term& b) const {
        return cmp_factor_lists(a.factors, b.factors) < 0;
    }
};

Expr::Expr(GaussRational c) {
    if (!c.is_zero()) terms_.push_back(Term{std::move(c), {}});
}

Expr::Expr(const Symbol& s) {
    terms_.push_back(Term{GaussRational(1), {Factor{s, ExpPoly(1)}}});
    normalize();
}

Expr Expr::sym_pow(const Symbol& s, ExpPoly e) {
    Expr out;
    out.terms_.push_back(Term{GaussRational(1), {Factor{s, std::move(e)}}});
    out.normalize();
    return out;
}

bool Expr::is_one() const {
    return terms_.size() == 1 && terms_[0].factors.empty() && terms_[0].coeff.is_one();
}

std::optional<GaussRational> Expr::as_constant() const {
    if (terms_.empty()) return GaussRational(0);
    if (terms_.size() == 1 && terms_[0].factors.empty()) return terms_[0].coeff;
    return std::nullopt;
}

void Expr::normalize_term(Term& t) {
    if (t.coeff.is_zero()) {
        t.factors.clear();
        return;
    }
    std::sort(t.factors.begin(), t.factors.end(),
              [](const Factor& a, const Factor& b) { return a.sym < b.sym; });
    std::vector<Factor> out;
    for (auto& f : t.factors) {
        if (!out.empty() && out.back().sym == f.sym)
            out.back().exp += f.exp;
        else
            out.push_back(std::move(f));
    }
    // Coefficient-wise mod-4 reduction of a power of i: exponent variables
    // are integers, so i^(4k) == 1 identically and e.g. i^(5*eps-3)
    // canonicalizes to i^(eps+1).
    auto mod4 = [](const ExpPoly& e) {
        ExpPoly reduced;
        for (const auto& [mono, c] : e.terms()) {
            long long cm = ((c % 4) + 4) % 4;
            if (cm == 0) continue;
            ExpPoly piece(cm);
            for (int v = 0; v < kNumExpVars; ++v)
                for (int k = 0; k < mono[v]; ++k) piece *= ExpPoly::var(static_cast<ExpVar>(v));
            reduced += piece;
        }
        return reduced;
    };

    std::vector<Factor> kept;
    for (auto& f : out) {
        if (f.exp.is_zero()) continue;
        if (f.sym.kind() == SymKind::ImagUnit) {
            ExpPoly reduced = mod4(f.exp);
            if (auto c = reduced.as_constant()) {
                t.coeff *= GaussRational::i_pow(*c);
                continue;
            }
            // A surviving symbolic power of i absorbs the unit part of the
            // coefficient: rotate the coefficient into the closed first
            // quadrant (re > 0, im >= 0) so that -1 * i^(e+2) and i^e agree.
            int rotations = 0;
            while (!(t.coeff.re() > 0 && t.coeff.im() >= 0) && rotations < 4) {
                t.coeff *= GaussRational::i();
                ++rotations;
            }
            if (rotations == 4)
                throw InternalInvariantViolation("coefficient rotation failed to canonicalize");
            f.exp = mod4(reduced - ExpPoly(rotations));
            kept.push_back(std::move(f));
            continue;
        }
        kept.push_back(std::move(f));
    }
    t.factors = std::move(kept);
}

void Expr::normalize() {
    for (auto& t : terms_) normalize_term(t);
    std::sort(terms_.begin(), terms_.end(), TermLess{});
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        if (!out.empty() && cmp_factor_lists(out.back().factors, t.factors) == 0)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Expr Expr::operator-() const {
    Expr e = *this;
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    e.normalize();  // sign flips re-split unit coefficients off i^(symbolic)
    return e;
}

Expr& Expr::operator+=(const Expr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.factors = a.factors;
            t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
            prod.push_back(std::move(t));
        }
    }
    terms_ = std::move(prod);
    normalize();
    return *this;
}

Expr Expr::pow_int(long long k) const {
    if (k == 0) return Expr(1);
    if (k < 0) {
        if (terms_.size() != 1)
            throw UnsupportedExponentForm("negative power of a multi-term expression");
        Term t;
        t.coeff = terms_[0].coeff.inv();
        for (const auto& f : terms_[0].factors) t.factors.push_back(Factor{f.sym, -f.exp});
        Expr inv;
        inv.terms_.push_back(std::move(t));
        inv.normalize();
        return inv.pow_int(-k);
    }
    Expr acc(1);
    Expr base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

Expr Expr::pow(const ExpPoly& e) const {
    if (auto c = e.as_constant()) return pow_int(*c);
    if (terms_.size() != 1)
        throw UnsupportedExponentForm("symbolic power of a multi-term expression");
    const Term& t = terms_[0];
    // Coefficient must be a unit; express it as a power of i so that the
    // symbolic exponent distributes exactly: (i*u)^eps == i^eps * u^eps.
    long long unit_power;
    if (t.coeff.is_one())
        unit_power = 0;
    else if (t.coeff == GaussRational::i())
        unit_power = 1;
    else if (t.coeff == GaussRational(-1))
        unit_power = 2;
    else if (t.coeff == -GaussRational::i())
        unit_power = 3;
    else
        throw UnsupportedExponentForm("symbolic power of non-unit coefficient " +
                                      t.coeff.to_string());
    Term out;
    out.coeff = GaussRational(1);
    if (unit_power != 0)
        out.factors.push_back(Factor{Symbol::imag_unit(), ExpPoly(unit_power) * e});
    for (const auto& f : t.factors) out.factors.push_back(Factor{f.sym, f.exp * e});
    Expr r;
    r.terms_.push_back(std::move(out));
    r.normalize();
    return r;
}

Expr Expr::divide_by_term(const Expr& divisor) const {
    return *this * divisor.pow_int(-1);
}

namespace {

// Derivative of a bare symbol; zero, one, or the shifted symbol.
Expr diff_symbol(const Symbol& s, Var v, DiffMode mode) {
    switch (s.kind()) {
        case SymKind::IndepVar:
            if (v == Var::X && (s.base() == "x" || s.base() == "z")) return Expr(1);
            if (v == Var::T && s.base() == "t") return Expr(1);
            return Expr();
        case SymKind::Param:
        case SymKind::ExpSym:
        case SymKind::Probe:
        case SymKind::ImagUnit:
            return Expr();
        case SymKind::Jet:
            return v == Var::X ? Expr(s.with_derivs(s.nx() + 1, s.nt()))
                               : Expr(s.with_derivs(s.nx(), s.nt() + 1));
        case SymKind::XiDeriv:
            return v == Var::X ? Expr() : Expr(Symbol::xi(s.nt() + 1));
        case SymKind::SeriesCoeff:
            if (mode == DiffMode::Travelling) return Expr();
            if (v == Var::X) {
                if (mode == DiffMode::Reduced) return Expr();
                return Expr(s.with_derivs(s.nx() + 1, s.nt()));
            }
            return Expr(s.with_derivs(s.nx(), s.nt() + 1));
    }
    return Expr();
}

}  // namespace

Expr Expr::differentiate(Var v, DiffMode mode) const {
    Expr out;
    for (const auto& t : terms_) {
        for (std::size_t k = 0; k < t.factors.size(); ++k) {
            Expr ds = diff_symbol(t.factors[k].sym, v, mode);
            if (ds.is_zero()) continue;
            // d(s^e) = e * s^(e-1) * ds, times the untouched cofactors.
            Term rest;
            rest.coeff = t.coeff;
            for (std::size_t j = 0; j < t.factors.size(); ++j) {
                if (j == k) continue;
                rest.factors.push_back(t.factors[j]);
            }
            Expr piece;
            piece.terms_.push_back(std::move(rest));
            piece.normalize();
            piece *= exp_to_expr(t.factors[k].exp);
            piece *= Expr::sym_pow(t.factors[k].sym, t.factors[k].exp - ExpPoly(1));
            piece *= ds;
            out += piece;
        }
    }
    return out;
}

Expr Expr::eval_exponents(const std::map<ExpVar, long long>& values) const {
    if (values.empty()) return *this;
    Expr out;
    for (const auto& t : terms_) {
        // The variable is bound everywhere it occurs: inside exponent
        // polynomials and as a multiplicative chain-rule factor.
        Term nt;
        nt.coeff = t.coeff;
        GaussRational scale(1);
        for (const auto& f : t.factors) {
            ExpPoly e = f.exp.eval_partial(values);
            if (f.sym.kind() == SymKind::ExpSym && values.count(f.sym.exp_var())) {
                auto power = e.as_constant();
                if (!power)
                    throw UnsupportedExponentForm("exponent symbol raised to a symbolic power");
                scale *= GaussRational(Rational(values.at(f.sym.exp_var()))).pow(*power);
                continue;
            }
            nt.factors.push_back(Factor{f.sym, std::move(e)});
        }
        nt.coeff *= scale;
        out.terms_.push_back(std::move(nt));
    }
    out.normalize();
    return out;
}

namespace {

// Key lookup for substitution: exact symbol match first, then the underived
// family member for differentiable kinds.
struct SubstIndex {
    const Substitution& sub;
    std::map<Symbol, const Expr*> exact;

    explicit SubstIndex(const Substitution& s) : sub(s) {
        for (const auto& [sym, rep] : s.map) exact[sym] = &rep;
    }

    static std::optional<Symbol> family_base(const Symbol& s) {
        switch (s.kind()) {
            case SymKind::Jet:
                if (s.nx() == 0 && s.nt() == 0) return std::nullopt;
                return Symbol::jet(s.base(), 0, 0, s.var_x(), s.var_t());
            case SymKind::XiDeriv:
                if (s.nt() == 0) return std::nullopt;
                return Symbol::xi(0);
            case SymKind::SeriesCoeff:
                if (s.nx() == 0 && s.nt() == 0) return std::nullopt;
                return Symbol::series_coeff(s.index());
            default:
                return std::nullopt;
        }
    }

    // Replacement expression for s, derived on demand for family members.
    std::optional<Expr> lookup(const Symbol& s) const {
        auto it = exact.find(s);
        if (it != exact.end()) return *it->second;
        auto base = family_base(s);
        if (!base) return std::nullopt;
        it = exact.find(*base);
        if (it == exact.end()) return std::nullopt;
        Expr rep = *it->second;
        for (int k = 0; k < s.nx(); ++k) rep = rep.differentiate(Var::X, sub.mode);
        for (int k = 0; k < s.nt(); ++k) rep = rep.differentiate(Var::T, sub.mode);
        return rep;
    }

    bool is_key_family(const Symbol& s) const {
        if (exact.count(s)) return true;
        auto base = family_base(s);
        return base && exact.count(*base);
    }
};

}  // namespace

Expr Expr::substitute(const Substitution& sub) const {
    // Drop identity bindings up front so u -> u never counts as a cycle.
    Substitution clean;
    clean.exp_values = sub.exp_values;
    clean.mode = sub.mode;
    for (const auto& [sym, rep] : sub.map) {
        if (rep == Expr(sym)) continue;
        clean.map.push_back({sym, rep});
    }

    SubstIndex index(clean);

    // Cycle detection over the binding graph: key -> keys reachable through
    // its replacement (including family members resolved to the same key).
    std::map<Symbol, std::vector<Symbol>> edges;
    for (const auto& [sym, rep] : clean.map) {
        std::vector<Symbol> out;
        for (const auto& s : rep.symbols()) {
            if (!index.is_key_family(s)) continue;
            auto base = SubstIndex::family_base(s);
            if (index.exact.count(s))
                out.push_back(s);
            else if (base)
                out.push_back(*base);
        }
        edges[sym] = std::move(out);
    }
    std::map<Symbol, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::function<void(const Symbol&)> visit = [&](const Symbol& s) {
        int& st = state[s];
        if (st == 1) throw CyclicSubstitution("substitution cycle through " + s.name());
        if (st == 2) return;
        st = 1;
        for (const auto& next : edges[s]) visit(next);
        st = 2;
    };
    for (const auto& [sym, _] : edges) visit(sym);

    Expr out;
    for (const auto& t : terms_) {
        Expr term_val(t.coeff);
        for (const auto& f : t.factors) {
            ExpPoly e = f.exp.eval_partial(clean.exp_values);
            auto rep = index.lookup(f.sym);
            Expr base = rep ? *rep : Expr(f.sym);
            term_val *= base.pow(e);
        }
        out += term_val;
    }

    // Exponent-variable values also apply inside replacement expressions and
    // to exponent symbols appearing as ordinary factors.
    if (!clean.exp_values.empty()) {
        out = out.eval_exponents(clean.exp_values);
        Substitution exp_syms;
        for (const auto& [v, value] : clean.exp_values)
            exp_syms.map.push_back({Symbol::exp_sym(v), Expr(value)});
        out = out.substitute(exp_syms);
    }
    return out;
}

Expr Expr::substitute(const Symbol& s, const Expr& replacement) const {
    Substitution sub;
    sub.map.push_back({s, replacement});
    return substitute(sub);
}

bool Expr::contains(const Symbol& s) const {
    for (const auto& t : terms_)
        for (const auto& f : t.factors)
            if (f.sym == s) return true;
    return false;
}

std::set<Symbol> Expr::symbols() const {
    std::set<Symbol> out;
    for (const auto& t : terms_)
        for (const auto& f : t.factors) out.insert(f.sym);
    return out;
}

long long Expr::max_power(const Symbol& s) const {
    long long best = 0;
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) {
            if (f.sym != s) continue;
            auto c = f.exp.as_constant();
            if (!c)
                throw UnsupportedExponentForm("symbolic exponent on " + s.name() +
                                              " where a constant power is required");
            best = std::max(best, *c);
        }
    }
    return best;
}

Expr Expr::coeff_of(const Symbol& s, const ExpPoly& e) const {
    Expr out;
    for (const auto& t : terms_) {
        ExpPoly found(0);
        Term stripped;
        stripped.coeff = t.coeff;
        for (const auto& f : t.factors) {
            if (f.sym == s)
                found = f.exp;
            else
                stripped.factors.push_back(f);
        }
        if (found != e) continue;
        Expr piece;
        piece.terms_.push_back(std::move(stripped));
        piece.normalize();
        out += piece;
    }
    return out;
}

std::pair<Expr, Expr> Expr::split_linear(const Symbol& s) const {
    Expr c, r;
    for (const auto& t : terms_) {
        ExpPoly found(0);
        Term stripped;
        stripped.coeff = t.coeff;
        for (const auto& f : t.factors) {
            if (f.sym == s)
                found = f.exp;
            else
                stripped.factors.push_back(f);
        }
        Expr piece;
        piece.terms_.push_back(std::move(stripped));
        piece.normalize();
        if (found.is_zero()) {
            r += piece;
        } else if (found == ExpPoly(1)) {
            c += piece;
        } else {
            throw InternalInvariantViolation("expression not linear in " + s.name() + ": power " +
                                             found.to_string());
        }
    }
    return {c, r};
}

std::map<ExpPoly, Expr, ExpStructuralLess> Expr::collect_powers(const Symbol& s) const {
    std::map<ExpPoly, Expr, ExpStructuralLess> out;
    for (const auto& t : terms_) {
        ExpPoly found(0);
        Term stripped;
        stripped.coeff = t.coeff;
        for (const auto& f : t.factors) {
            if (f.sym == s)
                found = f.exp;
            else
                stripped.factors.push_back(f);
        }
        Expr piece;
        piece.terms_.push_back(std::move(stripped));
        piece.normalize();
        out[found] += piece;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::pair<ExpPoly, Expr>> Expr::collect_powers_sorted(const Symbol& s) const {
    auto grouped = collect_powers(s);
    std::vector<std::pair<ExpPoly, Expr>> out(grouped.begin(), grouped.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return exp_compare(a.first, b.first) < 0; });
    return out;
}

Expr Expr::drop_powers_above(const Symbol& s, long long maxdeg) const {
    Expr out;
    for (const auto& t : terms_) {
        bool keep = true;
        for (const auto& f : t.factors) {
            if (f.sym != s) continue;
            auto c = f.exp.as_constant();
            if (c && *c > maxdeg) keep = false;
        }
        if (!keep) continue;
        Expr piece;
        piece.terms_.push_back(t);
        piece.normalize();
        out += piece;
    }
    return out;
}

namespace {

std::string exponent_suffix(const ExpPoly& e) {
    if (e == ExpPoly(1)) return "";
    if (auto c = e.as_constant()) {
        if (*c >= 0) return "^" + std::to_string(*c);
        return "^(" + std::to_string(*c) + ")";
    }
    return "^(" + e.to_string() + ")";
}

// Renders one term; a leading '-' is only produced for coefficients whose
// sign is unambiguous, mixed complex coefficients are parenthesized.
std::string term_to_string(const Term& t) {
    std::string factors;
    for (const auto& f : t.factors) {
        if (!factors.empty()) factors += "*";
        factors += f.sym.name() + exponent_suffix(f.exp);
    }
    const GaussRational& c = t.coeff;
    if (factors.empty()) {
        if (c.re() != 0 && c.im() != 0) return "(" + c.to_string() + ")";
        return c.to_string();
    }
    if (c.is_one()) return factors;
    if (c == GaussRational(-1)) return "-" + factors;
    if (c.re() != 0 && c.im() != 0) return "(" + c.to_string() + ")*" + factors;
    return c.to_string() + "*" + factors;
}

}  // namespace

std::string Expr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        std::string s = term_to_string(terms_[k]);
        if (k == 0) {
            out = s;
        } else if (!s.empty() && s[0] == '-') {
            out += " - " + s.substr(1);
        } else {
            out += " + " + s;
        }
    }
    return out;
}

Expr exp_to_expr(const ExpPoly& e) {
    Expr out;
    for (const auto& [mono, c] : e.terms()) {
        Expr term{GaussRational(Rational(c))};
        for (int v = 0; v < kNumExpVars; ++v)
            for (int k = 0; k < mono[v]; ++k)
                term *= Expr(Symbol::exp_sym(static_cast<ExpVar>(v)));
        out += term;
    }
    return out;
}

}  // namespace pt
