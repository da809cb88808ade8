#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/gauss_rational.hpp"

#include <random>

using pt::GaussRational;
using pt::grat;
using pt::Rational;

namespace {

GaussRational random_value(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return grat(num(rng), den(rng)) + grat(num(rng), den(rng)) * GaussRational::i();
}

}  // namespace

TEST_CASE("construction and basic predicates") {
    CHECK(GaussRational().is_zero());
    CHECK(GaussRational(1).is_one());
    CHECK(GaussRational(7).is_integer());
    CHECK(!grat(1, 2).is_integer());
    CHECK(grat(3, 4).is_real());
    CHECK(!GaussRational::i().is_real());
    CHECK(grat(6, 4) == grat(3, 2));
}

TEST_CASE("i^2 == -1 and powers of i cycle") {
    auto i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    CHECK(GaussRational::i_pow(0) == GaussRational(1));
    CHECK(GaussRational::i_pow(1) == i);
    CHECK(GaussRational::i_pow(2) == GaussRational(-1));
    CHECK(GaussRational::i_pow(3) == -i);
    CHECK(GaussRational::i_pow(4) == GaussRational(1));
    CHECK(GaussRational::i_pow(-1) == -i);
    CHECK(GaussRational::i_pow(-2) == GaussRational(-1));
    CHECK(GaussRational::i_pow(10) == GaussRational(-1));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        auto a = random_value(rng);
        auto b = random_value(rng);
        auto c = random_value(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GaussRational(0) == a);
        CHECK(a * GaussRational(1) == a);
        CHECK(a - a == GaussRational(0));
        if (!a.is_zero()) {
            CHECK(a * a.inv() == GaussRational(1));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("division is exact") {
    auto q = (grat(1, 2) + grat(1, 3) * GaussRational::i()) / (grat(2) - GaussRational::i());
    // (1/2 + i/3)(2 + i) / 5 = (1 - 1/3 + i(1/2 + 2/3)) / 5
    CHECK(q == grat(2, 15) + grat(7, 30) * GaussRational::i());
    CHECK_THROWS_AS(grat(1) / GaussRational(0), pt::ArithmeticError);
}

TEST_CASE("integer powers, including negative") {
    auto z = grat(1, 2) + GaussRational::i();
    CHECK(z.pow(0) == GaussRational(1));
    CHECK(z.pow(3) == z * z * z);
    CHECK(z.pow(-2) * z.pow(2) == GaussRational(1));
    CHECK(grat(-2).pow(5) == grat(-32));
}

TEST_CASE("conjugation and norm") {
    auto z = grat(3, 4) - grat(2) * GaussRational::i();
    CHECK(z.conj() == grat(3, 4) + grat(2) * GaussRational::i());
    CHECK(z * z.conj() == GaussRational(z.norm2()));
    CHECK(z.norm2() == Rational(9) / 16 + 4);
}

TEST_CASE("string round trip of canonical forms") {
    const char* cases[] = {"0",       "5",        "-12",       "1/2",      "-3/4",
                           "i",       "-i",       "2*i",       "-5/7*i",   "1/2+i",
                           "1/2-i",   "-2+3/5*i", "7-2/9*i",   "1+1/2*i",  "-1/3-1/4*i"};
    for (const char* s : cases) {
        auto v = GaussRational::from_string(s);
        CHECK(v.to_string() == s);
        CHECK(GaussRational::from_string(v.to_string()) == v);
    }
}

TEST_CASE("string parse accepts loose spacing and i/den form") {
    CHECK(GaussRational::from_string(" 1/2 + 3/4 * i ") ==
          GaussRational::from_string("1/2+3/4*i"));
    CHECK(GaussRational::from_string("i/2") == grat(1, 2) * GaussRational::i());
    CHECK(GaussRational::from_string("-i/3") == grat(-1, 3) * GaussRational::i());
    CHECK_THROWS_AS(GaussRational::from_string(""), pt::ArithmeticError);
    CHECK_THROWS_AS(GaussRational::from_string("1/0"), pt::ArithmeticError);
    CHECK_THROWS_AS(GaussRational::from_string("x+1"), pt::ArithmeticError);
}

TEST_CASE("round trip on random values") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 300; ++rep) {
        auto v = random_value(rng);
        CHECK(GaussRational::from_string(v.to_string()) == v);
    }
}
