#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/balance.hpp"

using namespace pt;

namespace {

Expr sp(const Symbol& s, long long e) { return Expr::sym_pow(s, ExpPoly(e)); }

const Symbol phix = Symbol::jet("phi", 1, 0);
const Expr kappa{Symbol::param("kappa")};
const Expr eps_sym{Symbol::exp_sym(ExpVar::Eps)};
const ExpPoly eps = ExpPoly::var(ExpVar::Eps);

// u_t = u_2x + u^2, the textbook equation that fails the test.
PDESystem quadratic_heat() {
    EqTerm ut;
    ut.ut_power = 1;
    EqTerm diff;
    diff.coeff = GaussRational(-1);
    diff.slots = {SlotUse{2, DeformExponent::concrete(1), 1}};
    EqTerm sq;
    sq.coeff = GaussRational(-1);
    sq.u_power = 2;
    return PDESystem("quadratic-heat", "u", {}, {ut, diff, sq});
}

}  // namespace

TEST_CASE("deformed burgers, concrete exponents") {
    PDESystem sys = PDESystem::burgers();
    for (long long e = 1; e <= 4; ++e) {
        CAPTURE(e);
        auto res = dominant_balances(sys, e, e);
        REQUIRE(res.size() == 1);
        CHECK(res[0].alpha == -1);
        CHECK_FALSE(res[0].constraint.has_value());
        CHECK_FALSE(res[0].generic);
        CHECK(res[0].lambda0 == Expr(-2 * e) * Expr::imag() * kappa * Expr(phix));
        CHECK(res[0].leading_exponent == ExpPoly(-2 * e - 1));
        CHECK(res[0].leading_terms == std::vector<std::size_t>{1, 2});
    }
}

TEST_CASE("deformed kdv, concrete exponents") {
    PDESystem sys = PDESystem::kdv();
    const long long scalars[] = {2, 7, 15};  // eps(3 eps + 1)/2
    for (long long e = 1; e <= 3; ++e) {
        CAPTURE(e);
        auto res = dominant_balances(sys, e, e);
        REQUIRE(res.size() == 1);
        CHECK(res[0].alpha == -2);
        CHECK(res[0].lambda0 == Expr(scalars[e - 1]) * sp(phix, 2));
        CHECK(res[0].leading_exponent == ExpPoly(-3 * e - 2));
        CHECK(res[0].leading_terms == std::vector<std::size_t>{1, 2});
    }
}

TEST_CASE("mismatched exponents admit no balance") {
    // alpha would have to be (1-3-1)/(1-3+1) = 3, which is not a pole order.
    auto res = dominant_balances(PDESystem::burgers(), 1, 3);
    CHECK(res.empty());
}

TEST_CASE("generic burgers forces eps equal mu") {
    auto res = dominant_balances(PDESystem::burgers());
    REQUIRE(res.size() == 1);
    const auto& b = res[0];
    CHECK(b.alpha == -1);
    CHECK(b.generic);
    REQUIRE(b.constraint.has_value());
    CHECK(b.constraint->kind == BalanceConstraint::Kind::EpsMinusMu);
    CHECK(b.constraint->value == 0);
    CHECK(b.constraint->to_string() == "eps=mu");
    CHECK(b.lambda0 == Expr(-2) * Expr::imag() * eps_sym * kappa * Expr(phix));
    CHECK(b.leading_exponent == ExpPoly(-1) - ExpPoly(2) * eps);
    CHECK(b.leading_terms == std::vector<std::size_t>{1, 2});
}

TEST_CASE("generic kdv forces eps equal mu with quadratic coefficient") {
    auto res = dominant_balances(PDESystem::kdv());
    REQUIRE(res.size() == 1);
    const auto& b = res[0];
    CHECK(b.alpha == -2);
    CHECK(b.generic);
    REQUIRE(b.constraint.has_value());
    CHECK(b.constraint->to_string() == "eps=mu");
    // lambda0 = eps(3 eps + 1)/2 phi_x^2
    Expr expect = Expr(grat(3, 2)) * Expr::sym_pow(Symbol::exp_sym(ExpVar::Eps), ExpPoly(2)) *
                      sp(phix, 2) +
                  Expr(grat(1, 2)) * eps_sym * sp(phix, 2);
    CHECK(b.lambda0 == expect);
    CHECK(b.leading_exponent == ExpPoly(-2) - ExpPoly(3) * eps);
}

TEST_CASE("one exponent pinned, the other analyzed symbolically") {
    // With eps = 2 the second-derivative exponent must come out at mu = 2,
    // and the coefficient is fully determined.
    auto res = dominant_balances(PDESystem::burgers(), 2, std::nullopt);
    REQUIRE(res.size() == 1);
    const auto& b = res[0];
    CHECK(b.alpha == -1);
    CHECK(b.generic);
    REQUIRE(b.constraint.has_value());
    CHECK(b.constraint->kind == BalanceConstraint::Kind::MuEquals);
    CHECK(b.constraint->value == 2);
    CHECK(b.constraint->to_string() == "mu=2");
    CHECK(b.lambda0 == Expr(-4) * Expr::imag() * kappa * Expr(phix));
}

TEST_CASE("quadratic heat equation balances at a double pole") {
    auto res = dominant_balances(quadratic_heat());
    REQUIRE(res.size() == 1);
    CHECK(res[0].alpha == -2);
    CHECK(res[0].lambda0 == Expr(-6) * sp(phix, 2));
    CHECK(res[0].leading_exponent == ExpPoly(-4));
    // u_t balances nothing here: the pair {u_2x, u^2} carries the pole.
    CHECK(res[0].leading_terms == std::vector<std::size_t>{1, 2});
}

TEST_CASE("constraint bookkeeping") {
    BalanceConstraint c{BalanceConstraint::Kind::EpsMinusMu, 2};
    CHECK(c.to_string() == "eps=mu+2");
    CHECK(c.min_free_value() == 3);
    auto vals = c.tie(5);
    CHECK(vals[ExpVar::Eps] == 5);
    CHECK(vals[ExpVar::Mu] == 3);

    BalanceConstraint d{BalanceConstraint::Kind::EpsMinusMu, -1};
    CHECK(d.to_string() == "mu=eps+1");
    CHECK(d.min_free_value() == 1);

    BalanceConstraint e{BalanceConstraint::Kind::EpsEquals, 4};
    CHECK(e.to_string() == "eps=4");
    CHECK(e.tie(9)[ExpVar::Mu] == 9);
}
