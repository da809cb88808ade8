#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/travelling.hpp"

using namespace pt;

namespace {

const Symbol kap = Symbol::param("kappa");
const Symbol vv = Symbol::param("v");
const Symbol zz = Symbol::indep("z");

Symbol zj(int k) { return Symbol::jet("zeta", k, 0, 'z', 't'); }
Expr sp(const Symbol& s, long long e) { return Expr::sym_pow(s, ExpPoly(e)); }
Expr q(long long n, long long d = 1) { return Expr(GaussRational(Rational(n, d))); }
Expr qi(long long n, long long d = 1) { return q(n, d) * Expr::imag(); }

}  // namespace

TEST_CASE("burgers with quadratic slope term reduces to a second order wave frame equation") {
    auto red = reduce_travelling(PDESystem::burgers(), 2, 2);
    CHECK(red.order == 2);

    Expr want = q(-1) * Expr(vv) * Expr(zj(1)) + Expr::imag() * Expr(zj(0)) * sp(zj(1), 2) +
                q(2) * Expr(kap) * Expr(zj(1)) * Expr(zj(2));
    CHECK(red.ode == want);

    // The equation itself is not a total derivative, but dividing by zeta_z
    // leaves one; its first integral has the quadratic in zeta.
    REQUIRE(red.first_integral.has_value());
    CHECK(red.integrated_after_division);
    Expr fi = q(-1) * Expr(vv) * Expr(zz) + qi(1, 2) * sp(zj(0), 2) + q(2) * Expr(kap) * Expr(zj(1));
    CHECK(*red.first_integral == fi);

    // Differentiating back and restoring the divided factor recovers the ode.
    CHECK(Expr(zj(1)) * d_dz(*red.first_integral) == red.ode);
}

TEST_CASE("burgers with plain slope term integrates once directly") {
    auto red = reduce_travelling(PDESystem::burgers(), 1, 1);
    CHECK(red.order == 2);

    Expr want = q(-1) * Expr(vv) * Expr(zj(1)) + Expr(zj(0)) * Expr(zj(1)) +
                qi(-1) * Expr(kap) * Expr(zj(2));
    CHECK(red.ode == want);

    REQUIRE(red.first_integral.has_value());
    CHECK_FALSE(red.integrated_after_division);
    Expr fi = q(-1) * Expr(vv) * Expr(zj(0)) + q(1, 2) * sp(zj(0), 2) + qi(-1) * Expr(kap) * Expr(zj(1));
    CHECK(*red.first_integral == fi);
    CHECK(d_dz(*red.first_integral) == red.ode);
}

TEST_CASE("kdv with quadratic slope term reduces to a third order wave frame equation") {
    auto red = reduce_travelling(PDESystem::kdv(), 2, 2);
    CHECK(red.order == 3);

    Expr want = q(-1) * Expr(vv) * Expr(zj(1)) + qi(-6) * Expr(zj(0)) * sp(zj(1), 2) +
                qi(2) * sp(zj(2), 2) + qi(2) * Expr(zj(1)) * Expr(zj(3));
    CHECK(red.ode == want);

    // Neither the equation nor its quotient by zeta_z is a total derivative.
    CHECK_FALSE(red.first_integral.has_value());
    CHECK_FALSE(red.integrated_after_division);
}

TEST_CASE("undeformed kdv integrates once directly") {
    auto red = reduce_travelling(PDESystem::kdv(), 1, 1);
    CHECK(red.order == 3);

    Expr want = q(-1) * Expr(vv) * Expr(zj(1)) + q(-6) * Expr(zj(0)) * Expr(zj(1)) + Expr(zj(3));
    CHECK(red.ode == want);

    REQUIRE(red.first_integral.has_value());
    CHECK_FALSE(red.integrated_after_division);
    Expr fi = q(-1) * Expr(vv) * Expr(zj(0)) + q(-3) * sp(zj(0), 2) + Expr(zj(2));
    CHECK(*red.first_integral == fi);
    CHECK(d_dz(*red.first_integral) == red.ode);
}

TEST_CASE("reduction agrees with substituting the wave ansatz by hand") {
    for (auto model : {PDESystem::burgers(), PDESystem::kdv()}) {
        CAPTURE(model.name());
        Expr expanded = model.expanded(2, 2);
        Substitution sub;
        sub.map.emplace_back(Symbol::jet("u", 0, 0), Expr(zj(0)));
        sub.map.emplace_back(Symbol::jet("u", 0, 1), q(-1) * Expr(vv) * Expr(zj(1)));
        sub.map.emplace_back(Symbol::jet("u", 1, 0), Expr(zj(1)));
        sub.map.emplace_back(Symbol::jet("u", 2, 0), Expr(zj(2)));
        sub.map.emplace_back(Symbol::jet("u", 3, 0), Expr(zj(3)));
        CHECK(reduce_travelling(model, 2, 2).ode == expanded.substitute(sub));
    }
}

TEST_CASE("wave frame derivative steps jets and the frame variable") {
    CHECK(d_dz(sp(zj(0), 2)) == q(2) * Expr(zj(0)) * Expr(zj(1)));
    CHECK(d_dz(Expr(vv) * Expr(zz)) == Expr(vv));
    CHECK(d_dz(Expr(kap)).is_zero());
    CHECK(d_dz(Expr(kap) * Expr(zj(1)) * Expr(zj(2))) ==
          Expr(kap) * sp(zj(2), 2) + Expr(kap) * Expr(zj(1)) * Expr(zj(3)));
    CHECK(d_dz(sp(zj(1), -1)) == q(-1) * sp(zj(1), -2) * Expr(zj(2)));
}
