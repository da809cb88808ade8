#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pt/errors.hpp"

namespace pt {

// Variables allowed inside symbolic exponents.  Deformation exponents eps and
// mu are assumed to be integers >= 1; alpha is the leading singularity order
// and r the resonance indeterminate (no sign assumptions on those two).
enum class ExpVar : std::uint8_t { Eps = 0, Mu = 1, Alpha = 2, R = 3 };

constexpr int kNumExpVars = 4;

const char* exp_var_name(ExpVar v);

// Integer-coefficient polynomial in {eps, mu, alpha, r}, used wherever an
// exponent may be symbolic: phi powers, deformation exponents, derivative
// counts shifted by alpha, probe exponents r + alpha.  Degrees stay tiny
// (products like alpha*eps occur, nothing deeper), so a sorted term vector
// is plenty.
class ExpPoly {
public:
    using Mono = std::array<std::uint8_t, kNumExpVars>;

    ExpPoly() = default;
    ExpPoly(long long c);  // NOLINT: constants convert implicitly
    static ExpPoly var(ExpVar v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws InternalInvariantViolation when not constant.
    long long constant_value() const;
    std::optional<long long> as_constant() const;

    bool depends_on(ExpVar v) const;
    int degree() const;  // total degree, 0 for constants and zero
    long long coeff(const Mono& m) const;
    long long linear_coeff(ExpVar v) const;   // coefficient of the degree-1 monomial in v
    long long constant_term() const;

    ExpPoly operator-() const;
    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    // Substitute integer values for a subset of the variables.
    ExpPoly eval_partial(const std::map<ExpVar, long long>& vals) const;

    // Substitute a polynomial for one variable, e.g. mu -> eps - 2.
    ExpPoly subst_var(ExpVar v, const ExpPoly& value) const;

    // Stable structural order (used only for canonical sorting, carries no
    // semantic meaning).
    int cmp_structural(const ExpPoly& o) const;

    // "2*eps-1", "alpha*eps+alpha-eps", "r", "-3".  Constants print bare.
    std::string to_string() const;

    const std::vector<std::pair<Mono, long long>>& terms() const { return terms_; }

    std::size_t hash() const;

private:
    // Sorted by monomial (lexicographic on degree tuples), zero coeffs dropped.
    std::vector<std::pair<Mono, long long>> terms_;
    void normalize();
};

// Three-way semantic comparison of exponents under the assumptions
// eps >= 1, mu >= 1 (integers).  Returns <0, 0, >0 when a-b is provably
// negative, zero, positive for every admissible assignment; throws
// AmbiguousOrdering otherwise (including whenever alpha or r survive in the
// difference).
int exp_compare(const ExpPoly& a, const ExpPoly& b);

// Non-throwing variant; nullopt means not provable either way.
std::optional<int> exp_try_compare(const ExpPoly& a, const ExpPoly& b);

// Strict ordering functor for map keys in collected phi-power maps.
struct ExpSemanticLess {
    bool operator()(const ExpPoly& a, const ExpPoly& b) const { return exp_compare(a, b) < 0; }
};

struct ExpStructuralLess {
    bool operator()(const ExpPoly& a, const ExpPoly& b) const { return a.cmp_structural(b) < 0; }
};

}  // namespace pt
