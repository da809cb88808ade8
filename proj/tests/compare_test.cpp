#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/compare.hpp"

using namespace pt;

namespace {

const Symbol kap = Symbol::param("kappa");
const Symbol om = Symbol::param("omega");

PainleveExpansion travelling(PDESystem sys, int order, std::map<int, Expr> bind = {}) {
    auto balances = dominant_balances(sys, 2, 2);
    REQUIRE(balances.size() == 1);
    auto rep = resonance_spectrum(sys, balances[0], 2, 2);
    ExpansionOptions opt;
    opt.mode = AnsatzMode::Travelling;
    opt.order = order;
    opt.eps = 2;
    opt.mu = 2;
    opt.bind = std::move(bind);
    return expand(sys, balances[0], rep, opt);
}

CompareOptions tight() {
    CompareOptions opt;
    opt.rtol = 1e-42;  // keep the integrator far below the truncation error
    return opt;
}

}  // namespace

TEST_CASE("integrating burgers tracks the series ever closer with order") {
    std::vector<std::pair<Symbol, GaussRational>> unit = {{kap, GaussRational(1)},
                                                          {om, GaussRational(1)}};
    const Rational lo(1, 10), hi(1, 2);

    struct Golden {
        int order;
        double deviation;
    };
    // Independently computed with series initial data at z = 0.1.
    const Golden golden[] = {{10, 1.39e-12}, {20, 7.76e-22}, {30, 3.58e-34}};

    Float150 previous{1};
    for (const auto& g : golden) {
        CAPTURE(g.order);
        auto exp = travelling(PDESystem::burgers(), g.order, {{2, Expr(0)}});
        auto res = numeric_compare(PDESystem::burgers(), exp, 2, 2, unit, lo, hi, tight());
        CHECK(res.order == g.order);
        CHECK(static_cast<double>(res.max_rel_deviation) == doctest::Approx(g.deviation).epsilon(0.02));
        CHECK(res.max_rel_deviation < Float150("1e-6"));
        CHECK(res.max_rel_deviation < previous);
        // Truncation error grows with z, so the worst sample is the far edge.
        CHECK(static_cast<double>(res.at_z) == doctest::Approx(0.5));
        previous = res.max_rel_deviation;
    }
}

TEST_CASE("integrating kdv stays within tolerance at high order") {
    auto exp = travelling(PDESystem::kdv(), 33);
    auto res = numeric_compare(PDESystem::kdv(), exp, 2, 2, {{om, GaussRational(1)}},
                               Rational(1, 10), Rational(1, 2), tight());
    CHECK(res.max_rel_deviation > 0);
    CHECK(res.max_rel_deviation < Float150("1e-6"));
}

TEST_CASE("a zero width window reports zero deviation") {
    auto exp = travelling(PDESystem::burgers(), 10, {{2, Expr(0)}});
    auto res = numeric_compare(PDESystem::burgers(), exp, 2, 2,
                               {{kap, GaussRational(1)}, {om, GaussRational(1)}}, Rational(1, 5),
                               Rational(1, 5));
    CHECK(res.max_rel_deviation == 0);
    CHECK(res.order == 10);
}

TEST_CASE("bad comparison setups are rejected") {
    auto exp = travelling(PDESystem::burgers(), 10, {{2, Expr(0)}});
    std::vector<std::pair<Symbol, GaussRational>> unit = {{kap, GaussRational(1)},
                                                          {om, GaussRational(1)}};

    // Window starting under the floor, where the pole dominates.
    CHECK_THROWS_AS(numeric_compare(PDESystem::burgers(), exp, 2, 2, unit, Rational(1, 100),
                                    Rational(1, 2)),
                    Error);
    // Reversed window.
    CHECK_THROWS_AS(numeric_compare(PDESystem::burgers(), exp, 2, 2, unit, Rational(1, 2),
                                    Rational(1, 10)),
                    Error);
    // Missing parameter value.
    CHECK_THROWS_AS(numeric_compare(PDESystem::burgers(), exp, 2, 2, {{kap, GaussRational(1)}},
                                    Rational(1, 10), Rational(1, 2)),
                    Error);
}
