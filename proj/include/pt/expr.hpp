#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pt/exponent.hpp"
#include "pt/gauss_rational.hpp"
#include "pt/symbol.hpp"

namespace pt {

class Expr;

// One multiplicative factor sym^exp.  Canonical terms never hold exp == 0.
struct Factor {
    Symbol sym;
    ExpPoly exp;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.sym == b.sym && a.exp == b.exp;
    }
};

// coeff * f1 * f2 * ... with factors sorted by symbol and at most one factor
// per symbol.
struct Term {
    GaussRational coeff;
    std::vector<Factor> factors;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.factors == b.factors;
    }
};

struct Substitution;

// Sparse multivariate expression: a sum of terms over the Gaussian rationals,
// with exponents that are themselves small integer polynomials in the
// exponent variables.  Every public operation returns canonical form, so
// structural equality is semantic equality for the supported fragment.
class Expr {
public:
    Expr() = default;  // zero
    Expr(GaussRational c);  // NOLINT
    Expr(long long c) : Expr(GaussRational(c)) {}  // NOLINT
    Expr(int c) : Expr(GaussRational(c)) {}        // NOLINT
    Expr(const Symbol& s);                         // NOLINT
    static Expr imag() { return Expr(GaussRational::i()); }
    static Expr sym_pow(const Symbol& s, ExpPoly e);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::optional<GaussRational> as_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Expr& o);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
    friend Expr operator*(const GaussRational& c, Expr e) { return e *= Expr(c); }

    friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    // Integer power; negative k requires a single-term base.
    Expr pow_int(long long k) const;
    // General power.  Symbolic exponents require a single term whose
    // coefficient is a unit (1, -1, i, -i); the unit becomes an explicit
    // i^(...) factor.  Throws UnsupportedExponentForm otherwise.
    Expr pow(const ExpPoly& e) const;

    // Exact division by a single-term expression.
    Expr divide_by_term(const Expr& divisor) const;

    Expr differentiate(Var v, DiffMode mode) const;

    Expr substitute(const Substitution& sub) const;
    Expr substitute(const Symbol& s, const Expr& replacement) const;
    Expr eval_exponents(const std::map<ExpVar, long long>& values) const;

    bool contains(const Symbol& s) const;
    std::set<Symbol> symbols() const;

    // Largest constant power of s over all terms (0 when absent); throws
    // UnsupportedExponentForm if s carries a symbolic exponent anywhere.
    long long max_power(const Symbol& s) const;

    // Exact coefficient of s^e (terms with no s factor belong to e == 0).
    Expr coeff_of(const Symbol& s, const ExpPoly& e) const;

    // Split an expression linear in s: returns (C, R) with *this == C*s + R
    // and neither part containing s.  Throws if s appears nonlinearly or with
    // a symbolic exponent.
    std::pair<Expr, Expr> split_linear(const Symbol& s) const;

    // Group terms by the exponent of s.  Structural keys, exact partition:
    // the sum of value * s^key over the map reproduces the expression.
    std::map<ExpPoly, Expr, ExpStructuralLess> collect_powers(const Symbol& s) const;

    // Same grouping sorted by the semantic exponent order (ascending).
    // Throws AmbiguousOrdering when two keys cannot be ordered.
    std::vector<std::pair<ExpPoly, Expr>> collect_powers_sorted(const Symbol& s) const;

    // Discard terms where s appears with constant exponent > maxdeg.
    Expr drop_powers_above(const Symbol& s, long long maxdeg) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
    void normalize();
    static void normalize_term(Term& t);
    friend struct TermLess;
};

// Substitution request: simultaneous symbol replacements plus integer values
// for exponent variables (applied both inside exponents and to exponent
// symbols used as factors).  Replacing the underived member of a
// differentiable family (u, xi, lambda2, ...) implicitly replaces its
// derivatives by the derivatives of the replacement, taken with `mode`
// semantics.
struct Substitution {
    std::vector<std::pair<Symbol, Expr>> map;
    std::map<ExpVar, long long> exp_values;
    DiffMode mode = DiffMode::General;
};

// The exponent polynomial as an expression over the exponent symbols,
// e.g. r + alpha - 1 as a three-term Expr.
Expr exp_to_expr(const ExpPoly& e);

}  // namespace pt
