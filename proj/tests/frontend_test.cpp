#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/parser.hpp"
#include "pt/report.hpp"

#include <cstdint>
#include <string>

using namespace pt;

namespace {

// Deterministic xorshift64 stream for the totality fuzzing below.
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

const char* kBurgersText = R"(pde burgers {
  field u(x, t)
  param kappa : real
  equation : dt(u) + u*D(u; eps) - i*kappa*D2(u; mu) = 0
}
)";

const char* kKdvText = R"(pde kdv {
  field u(x, t)
  equation : dt(u) - 6*u*D(u; eps) + D3(u; mu) = 0
}
)";

ParseError capture(const std::string& text) {
    try {
        parse_system(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("definition text reproduces the builtin systems") {
    CHECK(parse_system(kBurgersText) == PDESystem::burgers());
    CHECK(parse_system(kKdvText) == PDESystem::kdv());
}

TEST_CASE("canonical printing round-trips") {
    CHECK(print_system(PDESystem::burgers()) == kBurgersText);
    CHECK(print_system(PDESystem::kdv()) == kKdvText);

    const char* custom = R"(pde mixed {
  field w(x, t)
  param a : int
  param b : complex
  equation : 2*dt(w) + 3/4*a*a*w*w*D(w; 2)*D(w; 2) = b*D3(w; mu) - i*D2(w; eps)
}
)";
    PDESystem sys = parse_system(custom);
    CHECK(sys.field() == "w");
    CHECK(sys.params().size() == 2);
    // dt coefficient was 2: everything lands normalized by it.
    CHECK(sys.terms()[0].ut_power == 1);
    CHECK(sys.terms()[0].coeff == GaussRational(1));
    CHECK(sys.terms()[1].coeff == GaussRational(Rational(3, 8)));
    CHECK(sys.terms()[1].params.at("a") == 2);
    CHECK(sys.terms()[1].slots[0].power == 2);
    CHECK(parse_system(print_system(sys)) == sys);

    // Right-hand side terms come across with flipped sign.  Term order follows
    // the source, so structural equality needs the same order; a rearranged
    // right-hand side still agrees as an expression.
    PDESystem rhs = parse_system(R"(pde kdv {
  field u(x, t)
  equation : dt(u) - 6*u*D(u; eps) = -D3(u; mu)
}
)");
    CHECK(rhs == PDESystem::kdv());
    PDESystem moved = parse_system(R"(pde kdv {
  field u(x, t)
  equation : dt(u) + D3(u; mu) = 6*u*D(u; eps)
}
)");
    CHECK(moved.expanded(std::nullopt, std::nullopt) ==
          PDESystem::kdv().expanded(std::nullopt, std::nullopt));
}

TEST_CASE("comments and spacing are immaterial") {
    const char* spaced = "pde burgers{field u(x,t) # the field\n"
                         "param kappa:real\n"
                         "equation:dt(u)+u*D(u;eps)-i*kappa*D2(u;mu)=0}  # done\n";
    CHECK(parse_system(spaced) == PDESystem::burgers());
}

TEST_CASE("errors carry one-based source positions") {
    ParseError e1 = capture("pde @");
    CHECK(e1.line == 1);
    CHECK(e1.column == 5);
    CHECK(std::string(e1.what()).find("unexpected character") != std::string::npos);

    // Column of the undeclared symbol itself, on line 3.
    ParseError e2 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + nu*u = 0\n}\n");
    CHECK(e2.line == 3);
    CHECK(e2.column == 22);
    CHECK(std::string(e2.what()).find("nu") != std::string::npos);

    ParseError e3 = capture("pde m {\n  field u(x, t)\n  field v(x, t)\n  equation : dt(u) = 0\n}\n");
    CHECK(e3.line == 3);
    CHECK(std::string(e3.what()).find("duplicate field") != std::string::npos);

    ParseError e4 = capture("pde m {\n  field u(x, t)\n  param k : quaternion\n  equation : dt(u) = 0\n}\n");
    CHECK(std::string(e4.what()).find("quaternion") != std::string::npos);

    ParseError e5 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + 1/0*u = 0\n}\n");
    CHECK(std::string(e5.what()).find("zero denominator") != std::string::npos);

    ParseError e6 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + D(u; nu) = 0\n}\n");
    CHECK(std::string(e6.what()).find("deformation exponent") != std::string::npos);

    ParseError e7 = capture("pde m {\n  equation : 1 = 0\n}\n");
    CHECK(e7.line == 2);
    CHECK(std::string(e7.what()).find("no field declared") != std::string::npos);

    // Shape violations from the system check surface at the equation keyword.
    ParseError e8 = capture("pde m {\n  field u(x, t)\n  equation : u*D(u; 2) = 0\n}\n");
    CHECK(e8.line == 3);
    CHECK(std::string(e8.what()).find("time-derivative") != std::string::npos);

    ParseError e9 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + dt(u) = 0\n}\n");
    CHECK(std::string(e9.what()).find("time-derivative") != std::string::npos);

    ParseError e10 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) = 0\n} extra\n");
    CHECK(e10.line == 4);
    CHECK(std::string(e10.what()).find("trailing input") != std::string::npos);

    ParseError e11 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + 1/ = 0\n}\n");
    CHECK(std::string(e11.what()).find("denominator") != std::string::npos);

    ParseError e12 = capture("pde m {\n  field u(x, t)\n  equation : dt(u) + D(v; 2) = 0\n}\n");
    CHECK(std::string(e12.what()).find("declared field") != std::string::npos);
}

TEST_CASE("totality: arbitrary input either parses or raises a located error") {
    Rng rng;
    auto check_one = [](const std::string& text) {
        try {
            (void)parse_system(text);
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
            CHECK(e.column >= 1);
        }
        // Anything else escaping counts as a crash and fails the test binary.
    };

    for (int it = 0; it < 2000; ++it) {
        std::string text;
        int len = static_cast<int>(rng.next() % 64);
        for (int k = 0; k < len; ++k) {
            std::uint64_t r = rng.next();
            char c = r % 8 == 0 ? '\n' : static_cast<char>(32 + r % 95);
            text += c;
        }
        check_one(text);
    }

    // Single-character mutations of a valid definition.
    std::string base = kBurgersText;
    for (int it = 0; it < 500; ++it) {
        std::string text = base;
        std::size_t at = rng.next() % text.size();
        text[at] = static_cast<char>(32 + rng.next() % 95);
        check_one(text);
    }
}

TEST_CASE("report documents round-trip through json") {
    Report r;
    r.model = "burgers";
    r.mode = "classify/reduced";
    r.balance = {"alpha = -1; lambda0 = 2*i*kappa"};
    r.resonances = {"alpha=-1: polynomial r^2 - r - 2; integer roots -1, 2"};
    r.coefficients = {"phi^(-1): 2*i*kappa", "phi^0: 0"};
    r.verdict = "PASSES";
    r.diagnostics = {{"reason", "2 of 2 parameters supplied"}};
    r.input_hash = input_fingerprint(print_system(PDESystem::burgers()));

    std::string text = serialize_report(r);
    CHECK(parse_report(text) == r);
    CHECK(text.find("\"engine_version\": \"1.0.0\"") != std::string::npos);

    CHECK_THROWS_AS(parse_report("not json at all {"), ParseError);
    CHECK_THROWS_AS(parse_report("{}"), ParseError);
    CHECK_THROWS_AS(parse_report("[1, 2]"), ParseError);

    // Dropping a required field is detected.
    std::string broken = text;
    std::size_t at = broken.find("\"verdict\"");
    broken.replace(at, 9, "\"verduct\"");
    CHECK_THROWS_AS(parse_report(broken), ParseError);
}

TEST_CASE("input fingerprints are stable and content-sensitive") {
    CHECK(input_fingerprint("") == "cbf29ce484222325");
    CHECK(input_fingerprint("a") == input_fingerprint("a"));
    CHECK(input_fingerprint("a") != input_fingerprint("b"));
    CHECK(input_fingerprint(kBurgersText).size() == 16);
}
