#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/series.hpp"
#include "pt/system.hpp"

using namespace pt;

namespace {

Expr sp(const Symbol& s, long long e) { return Expr::sym_pow(s, ExpPoly(e)); }

const Symbol phix = Symbol::jet("phi", 1, 0);
const Symbol phit = Symbol::jet("phi", 0, 1);
const Symbol lam0 = Symbol::series_coeff(0);
const Symbol lam1 = Symbol::series_coeff(1);

}  // namespace

TEST_CASE("monomial window and coefficient lookup") {
    PhiSeries s = PhiSeries::monomial(-2, Expr(7));
    CHECK(s.base() == -2);
    CHECK(s.length() == 1);
    CHECK(s.max_exponent() == -2);
    CHECK(s.at_exponent(-2) == Expr(7));
    CHECK(s.at_exponent(-1).is_zero());
    CHECK(s.at_exponent(-5).is_zero());
    CHECK(s.min_nonzero_exponent() == -2);
}

TEST_CASE("addition aligns different windows") {
    PhiSeries a = PhiSeries::monomial(-1, Expr(lam0));
    a.add(PhiSeries::monomial(2, Expr(lam1)));
    CHECK(a.base() == -1);
    CHECK(a.max_exponent() == 2);
    CHECK(a.at_exponent(-1) == Expr(lam0));
    CHECK(a.at_exponent(0).is_zero());
    CHECK(a.at_exponent(2) == Expr(lam1));
}

TEST_CASE("multiplication adds exponents and truncates") {
    PhiSeries a(-1, {Expr(2), Expr(3)});       // 2 phi^-1 + 3
    PhiSeries b(0, {Expr(1), Expr(5)});        // 1 + 5 phi
    PhiSeries p = PhiSeries::mul(a, b, 0);     // cut above phi^0
    CHECK(p.at_exponent(-1) == Expr(2));
    CHECK(p.at_exponent(0) == Expr(13));       // 2*5 + 3*1
    CHECK(p.max_exponent() == 0);

    PhiSeries q = a.pow_int(2, 1);             // (2 phi^-1 + 3)^2 through phi^1
    CHECK(q.at_exponent(-2) == Expr(4));
    CHECK(q.at_exponent(-1) == Expr(12));
    CHECK(q.at_exponent(0) == Expr(9));
    CHECK(q.max_exponent() <= 1);
}

TEST_CASE("x-derivative in general mode tracks both contributions") {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::General;
    PhiSeries s = PhiSeries::monomial(-1, Expr(lam0));
    PhiSeries d = s.diff_x(ctx);
    // d/dx (lam0 phi^-1) = -lam0 phi_x phi^-2 + lam0_x phi^-1
    CHECK(d.at_exponent(-2) == Expr(-1) * Expr(lam0) * Expr(phix));
    CHECK(d.at_exponent(-1) == Expr(Symbol::series_coeff(0, 1, 0)));
}

TEST_CASE("t-derivative in reduced mode uses phi_t = -xi_t") {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::Reduced;
    PhiSeries s = PhiSeries::monomial(-1, Expr(lam0));
    PhiSeries d = s.diff_t(ctx);
    // d/dt (lam0 phi^-1) = lam0 xi_t phi^-2 + lam0_t phi^-1
    CHECK(d.at_exponent(-2) == Expr(lam0) * Expr(Symbol::xi(1)));
    CHECK(d.at_exponent(-1) == Expr(Symbol::series_coeff(0, 0, 1)));

    // In reduced mode the coefficients carry no x-dependence at all.
    PhiSeries dx = s.diff_x(ctx);
    CHECK(dx.at_exponent(-2) == Expr(-1) * Expr(lam0));
    CHECK(dx.at_exponent(-1).is_zero());
}

TEST_CASE("t-derivative in travelling mode uses phi_t = -omega and constant coefficients") {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::Travelling;
    PhiSeries s = PhiSeries::monomial(-1, Expr(lam0));
    PhiSeries d = s.diff_t(ctx);
    CHECK(d.at_exponent(-2) == Expr(lam0) * Expr(Symbol::param("omega")));
    CHECK(d.at_exponent(-1).is_zero());
}

TEST_CASE("pde evaluation agrees with direct series arithmetic") {
    // F = u_2x * kappa + u * u_x, evaluated on a short series both through
    // the jet-substitution path and by hand.
    Symbol kappa = Symbol::param("kappa");
    Expr pde = Expr(kappa) * Expr(Symbol::jet("u", 2, 0)) +
               Expr(Symbol::jet("u", 0, 0)) * Expr(Symbol::jet("u", 1, 0));

    for (AnsatzMode mode : {AnsatzMode::General, AnsatzMode::Reduced}) {
        SeriesContext ctx;
        ctx.mode = mode;
        PhiSeries u(-1, {Expr(lam0), Expr(lam1)});
        int cut = 3;
        PhiSeries lhs = evaluate_pde_on_series(pde, "u", u, ctx, cut);

        PhiSeries expect = u.diff_x(ctx).diff_x(ctx).scaled(Expr(kappa));
        expect.add(PhiSeries::mul(u, u.diff_x(ctx), cut));
        expect = expect.truncated(cut);
        for (int e = lhs.base() - 1; e <= cut; ++e) {
            CAPTURE(e);
            CHECK(lhs.at_exponent(e) == expect.at_exponent(e));
        }
    }
}

TEST_CASE("non-field factors multiply into coefficients unchanged") {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::General;
    Expr pde = Expr(Symbol::param("c")) * Expr::imag() * Expr(Symbol::jet("u", 0, 0));
    PhiSeries u = PhiSeries::monomial(-1, Expr(lam0));
    PhiSeries f = evaluate_pde_on_series(pde, "u", u, ctx, 5);
    CHECK(f.at_exponent(-1) == Expr(Symbol::param("c")) * Expr::imag() * Expr(lam0));
}

TEST_CASE("field powers above the cut vanish cleanly") {
    SeriesContext ctx;
    ctx.mode = AnsatzMode::Reduced;
    Expr pde = sp(Symbol::jet("u", 0, 0), 3);
    PhiSeries u = PhiSeries::monomial(2, Expr(lam0));  // u^3 starts at phi^6
    PhiSeries f = evaluate_pde_on_series(pde, "u", u, ctx, 5);
    CHECK_FALSE(f.min_nonzero_exponent().has_value());
}

TEST_CASE("classical burgers annihilates its own travelling solitary series start") {
    // For u_t + u u_x - i kappa u_2x (eps = mu = 1) the leading balance
    // u = -2 i kappa phi^-1 must cancel exactly at the lowest order phi^-3.
    PDESystem sys = PDESystem::burgers();
    Expr pde = sys.expanded(1, 1);
    SeriesContext ctx;
    ctx.mode = AnsatzMode::General;
    Expr lead = Expr(-2) * Expr::imag() * Expr(Symbol::param("kappa")) * Expr(phix);
    PhiSeries u = PhiSeries::monomial(-1, lead);
    PhiSeries f = evaluate_pde_on_series(pde, "u", u, ctx, -3);
    CHECK(f.at_exponent(-3).is_zero());
}
