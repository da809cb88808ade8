#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/polyfit.hpp"
#include "pt/resonance.hpp"

using namespace pt;

namespace {

Expr sp(const Symbol& s, long long e) { return Expr::sym_pow(s, ExpPoly(e)); }

const Symbol phix = Symbol::jet("phi", 1, 0);
const Symbol kap = Symbol::param("kappa");
const Symbol rsym = Symbol::exp_sym(ExpVar::R);
const std::vector<long long> kBurgersPoly{-2, -1, 1};  // (r+1)(r-2)

// u_t = u_2x + u^2
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

BalanceResult only_balance(const PDESystem& sys, std::optional<long long> eps = std::nullopt,
                           std::optional<long long> mu = std::nullopt) {
    auto res = dominant_balances(sys, eps, mu);
    REQUIRE(res.size() == 1);
    return res[0];
}

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("burgers spectrum is (r+1)(r-2) at every exponent") {
    PDESystem sys = PDESystem::burgers();
    for (long long e = 1; e <= 4; ++e) {
        CAPTURE(e);
        auto rep = resonance_spectrum(sys, only_balance(sys, e, e), e, e);
        CHECK(rep.poly == kBurgersPoly);
        CHECK(rep.integer_roots == std::vector<long long>{-1, 2});
        CHECK(rep.remainder == std::vector<long long>{1});
        CHECK(rep.universal);
        CHECK_FALSE(rep.quadratic().has_value());
        // Content is 2^(e-1) e^e kappa^e phi_x^(2e) up to a power of i.
        Expr scale = Expr(ipow(2, e - 1) * ipow(e, e)) * sp(kap, e) * sp(phix, 2 * e);
        auto unit = rep.content.divide_by_term(scale).as_constant();
        REQUIRE(unit.has_value());
        CHECK(unit->norm2() == 1);
    }
}

TEST_CASE("burgers spectrum at exponent two, full coefficient") {
    PDESystem sys = PDESystem::burgers();
    auto rep = resonance_spectrum(sys, only_balance(sys, 2, 2), 2, 2);
    Expr expect = Expr(8) * Expr::imag() * sp(kap, 2) * sp(phix, 4) *
                  (sp(rsym, 2) - Expr(rsym) - Expr(2));
    CHECK(rep.full() == expect);
    CHECK(rep.content == Expr(8) * Expr::imag() * sp(kap, 2) * sp(phix, 4));
}

TEST_CASE("kdv spectrum at exponent one") {
    PDESystem sys = PDESystem::kdv();
    auto rep = resonance_spectrum(sys, only_balance(sys, 1, 1), 1, 1);
    // (r+1)(r-4)(r-6)
    CHECK(rep.poly == std::vector<long long>{24, 14, -9, 1});
    CHECK(rep.integer_roots == std::vector<long long>{-1, 4, 6});
    CHECK(rep.remainder == std::vector<long long>{1});
    CHECK(rep.universal);
    CHECK(rep.content == Expr(sp(phix, 3)));
}

TEST_CASE("kdv spectrum at exponent two keeps an irrational pair") {
    PDESystem sys = PDESystem::kdv();
    auto rep = resonance_spectrum(sys, only_balance(sys, 2, 2), 2, 2);
    // -28i phi_x^6 (r+1)(r^2 - 16r + 42); the quadratic roots are 8 +- sqrt(22)
    CHECK(rep.poly == std::vector<long long>{42, 26, -15, 1});
    CHECK(rep.integer_roots == std::vector<long long>{-1});
    CHECK(rep.remainder == std::vector<long long>{42, -16, 1});
    CHECK(rep.universal);
    CHECK(rep.content == Expr(-28) * Expr::imag() * sp(phix, 6));
    auto q = rep.quadratic();
    REQUIRE(q.has_value());
    CHECK(q->a == 1);
    CHECK(q->b == -16);
    CHECK(q->c == 42);
    CHECK(q->disc == 88);
    CHECK_FALSE(q->square_disc);
}

TEST_CASE("kdv spectrum at exponent three") {
    PDESystem sys = PDESystem::kdv();
    auto rep = resonance_spectrum(sys, only_balance(sys, 3, 3), 3, 3);
    // -2700 phi_x^9 (r+1)(r^2 - 22r + 60)
    CHECK(rep.poly == std::vector<long long>{60, 38, -21, 1});
    CHECK(rep.integer_roots == std::vector<long long>{-1});
    CHECK(rep.remainder == std::vector<long long>{60, -22, 1});
    CHECK(rep.content == Expr(-2700) * sp(phix, 9));
}

TEST_CASE("quadratic heat spectrum") {
    PDESystem sys = quadratic_heat();
    auto rep = resonance_spectrum(sys, only_balance(sys));
    CHECK(rep.poly == std::vector<long long>{-6, -5, 1});  // (r+1)(r-6)
    CHECK(rep.integer_roots == std::vector<long long>{-1, 6});
    CHECK(rep.universal);
    CHECK(rep.content == Expr(-1) * sp(phix, 2));
}

TEST_CASE("generic balance instantiates to the concrete spectrum") {
    PDESystem sys = PDESystem::kdv();
    BalanceResult gen = only_balance(sys);
    BalanceResult conc = only_balance(sys, 2, 2);
    auto a = resonance_spectrum(sys, gen, 2, 2);
    auto b = resonance_spectrum(sys, conc, 2, 2);
    CHECK(a.poly == b.poly);
    CHECK(a.content == b.content);
    CHECK(a.integer_roots == b.integer_roots);
}

TEST_CASE("exponent values must satisfy the balance constraint") {
    PDESystem sys = PDESystem::burgers();
    BalanceResult gen = only_balance(sys);
    CHECK_THROWS_AS(resonance_spectrum(sys, gen, 1, 3), UnsupportedBalance);
    // mu=2 satisfies the recorded constraint, but the coefficient was pinned
    // at eps=2 and cannot balance the eps=3 equation.
    BalanceResult pinned = only_balance(sys, 2, std::nullopt);
    CHECK_THROWS_AS(resonance_spectrum(sys, pinned, 3, 2), UnsupportedBalance);
}

TEST_CASE("burgers resonances are integral for every exponent") {
    PDESystem sys = PDESystem::burgers();
    auto rec = integrality_analysis(sys, only_balance(sys));
    REQUIRE(rec.family.size() == 2);
    CHECK(rec.family[0] == std::vector<long long>{-2});
    CHECK(rec.family[1] == std::vector<long long>{1});
    CHECK(rec.always_roots == std::vector<long long>{2});
    CHECK(rec.always_integral);
    CHECK(rec.sporadic.empty());
    CHECK(rec.disc.empty());
}

TEST_CASE("kdv integrality holds only at exponent one") {
    PDESystem sys = PDESystem::kdv();
    auto rec = integrality_analysis(sys, only_balance(sys));
    // After removing r = -1: r^2 - 2(2+3e) r + 6(1+3e)
    REQUIRE(rec.family.size() == 3);
    CHECK(rec.family[0] == std::vector<long long>{6, 18});
    CHECK(rec.family[1] == std::vector<long long>{-4, -6});
    CHECK(rec.family[2] == std::vector<long long>{1});
    CHECK(rec.disc == std::vector<long long>{-8, -24, 36});
    CHECK(rec.always_roots.empty());
    CHECK_FALSE(rec.always_integral);
    REQUIRE(rec.sporadic.size() == 1);
    CHECK(rec.sporadic[0].eps == 1);
    CHECK(rec.sporadic[0].roots == std::vector<long long>{4, 6});
}

TEST_CASE("integrality analysis needs a free exponent") {
    PDESystem sys = quadratic_heat();
    CHECK_THROWS_AS(integrality_analysis(sys, only_balance(sys)), UnsupportedBalance);
}

TEST_CASE("square detection") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(3) == 1);
    CHECK(integer_sqrt(4) == 2);
    CHECK(integer_sqrt(999999999999LL) == 999999);
    long long r = -1;
    CHECK(perfect_square(49, &r));
    CHECK(r == 7);
    CHECK_FALSE(perfect_square(50));
    CHECK(perfect_square(0, &r));
    CHECK(r == 0);
    CHECK_FALSE(perfect_square(-4));
    CHECK_THROWS_AS(integer_sqrt(-1), ArithmeticError);
}
