#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pt/cli.hpp"
#include "pt/parser.hpp"
#include "pt/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace pt;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_command(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

// Scoped temp file in the test working directory.
struct TempFile {
    std::string path;
    TempFile(std::string name, const std::string& content) : path(std::move(name)) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("balance reports the generic tie and the concrete failure") {
    RunResult generic = run({"balance", "--model", "burgers"});
    CHECK(generic.code == 0);
    CHECK(has(generic.out, "alpha = -1"));
    CHECK(has(generic.out, "constraint: eps=mu"));

    RunResult bad = run({"balance", "--model", "burgers", "--epsilon", "1", "--mu", "2"});
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "no admissible dominant balance"));

    RunResult kdv_bad = run({"balance", "--model", "kdv", "--epsilon", "2", "--mu", "1"});
    CHECK(kdv_bad.code == 1);
}

TEST_CASE("resonances lists roots and the surviving irrational factor") {
    RunResult kdv1 = run({"resonances", "--model", "kdv", "--epsilon", "1"});
    CHECK(kdv1.code == 0);
    CHECK(has(kdv1.out, "integer roots: -1, 4, 6"));

    RunResult kdv2 = run({"resonances", "--model", "kdv", "--epsilon", "2"});
    CHECK(kdv2.code == 0);
    CHECK(has(kdv2.out, "integer roots: -1"));
    CHECK(has(kdv2.out, "non-integer factor: r^2 - 16*r + 42 (discriminant 88, irrational roots)"));

    RunResult burg = run({"resonances", "--model", "burgers", "--epsilon", "2"});
    CHECK(burg.code == 0);
    CHECK(has(burg.out, "integer roots: -1, 2"));
}

TEST_CASE("expand prints exact coefficients") {
    RunResult burg = run({"expand", "--model", "burgers", "--epsilon", "2", "--ansatz",
                          "travelling", "--lambda2", "0", "--order", "6"});
    CHECK(burg.code == 0);
    CHECK(has(burg.out, "resonances: -1, 2"));
    CHECK(has(burg.out, "phi^(-1): -4*i*kappa"));
    CHECK(has(burg.out, "order 2: coefficient bound to 0"));
    // phi^2 carries omega/(8 kappa)
    CHECK(has(burg.out, "1/8"));
    CHECK(has(burg.out, "omega"));

    RunResult kdv = run({"expand", "--model", "kdv", "--epsilon", "2", "--ansatz", "travelling",
                         "--order", "10", "--format", "json"});
    CHECK(kdv.code == 0);
    Report rep = parse_report(kdv.out);
    CHECK(rep.model == "kdv");
    CHECK(rep.engine_version == "1.0.0");
    CHECK(rep.input_hash.size() == 16);
    REQUIRE(rep.coefficients.size() == 11);
    CHECK(has(rep.coefficients[0], "phi^(-2): 7"));
    CHECK(has(rep.coefficients[5], "156"));     // phi^3: i omega / 156
    CHECK(has(rep.coefficients[10], "192192"));  // phi^8: omega^2 / 192192
}

TEST_CASE("classify maps verdicts to exit codes") {
    RunResult passes = run({"classify", "--model", "burgers", "--epsilon", "2", "--order", "6"});
    CHECK(passes.code == 0);
    CHECK(has(passes.out, "verdict: PASSES"));

    RunResult defective = run({"classify", "--model", "kdv", "--epsilon", "2", "--ansatz",
                               "travelling", "--order", "12"});
    CHECK(defective.code == 0);
    CHECK(has(defective.out, "verdict: DEFECTIVE"));

    RunResult fails = run({"classify", "--model", "burgers", "--epsilon", "1", "--mu", "2",
                           "--format", "json"});
    CHECK(fails.code == 1);
    Report rep = parse_report(fails.out);
    CHECK(rep.verdict == "FAILS");
    CHECK(rep.diagnostics.at("reason") == "no admissible dominant balance");
}

TEST_CASE("model definitions load from files") {
    TempFile file("cli_test_model.pde", print_system(PDESystem::burgers()));
    RunResult r = run({"classify", "--model", file.path, "--epsilon", "2", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "model: burgers"));
    CHECK(has(r.out, "verdict: PASSES"));

    RunResult missing = run({"balance", "--model", "no_such_file.pde"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "cannot read model file: no_such_file.pde"));

    TempFile broken("cli_test_broken.pde", "pde x {\n  field u(x, t)\n  equation : u = 0\n}\n");
    RunResult bad = run({"balance", "--model", broken.path});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "parse error at 3:3"));
}

TEST_CASE("converge reports decay diagnostics") {
    RunResult burg = run({"converge", "--model", "burgers", "--epsilon", "2", "--lambda2", "0",
                          "--order", "30"});
    CHECK(burg.code == 0);
    CHECK(has(burg.out, "entries: 28"));
    CHECK(has(burg.out, "root test: CONVERGENT-INDICATION"));
    CHECK(has(burg.out, "decay envelope: holds through label 28"));

    RunResult csv = run({"converge", "--model", "burgers", "--epsilon", "2", "--lambda2", "0",
                         "--order", "30", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream rows(csv.out);
    std::string header;
    std::getline(rows, header);
    CHECK(header == "n,re_num,re_den,im_num,im_den,abs,abs_nth_root,bound_rhs,holds");
    int count = 0;
    for (std::string line; std::getline(rows, line);)
        if (!line.empty()) ++count;
    CHECK(count == 28);

    // No kappa parameter and only six nonzero entries: diagnostics withhold.
    RunResult kdv = run({"converge", "--model", "kdv", "--epsilon", "2", "--order", "30"});
    CHECK(kdv.code == 1);
    CHECK(has(kdv.out, "INCONCLUSIVE"));
    CHECK(has(kdv.out, "decay envelope: not applicable"));
}

TEST_CASE("travelling prints the wave-frame ode and first integral") {
    RunResult burg = run({"travelling", "--model", "burgers", "--epsilon", "2"});
    CHECK(burg.code == 0);
    CHECK(has(burg.out, "zeta"));
    CHECK(has(burg.out, "order: 2"));
    CHECK(has(burg.out, "first integral:"));
    CHECK(has(burg.out, "(after dividing by zeta_z)"));

    RunResult kdv1 = run({"travelling", "--model", "kdv", "--epsilon", "1"});
    CHECK(kdv1.code == 0);
    CHECK(has(kdv1.out, "first integral:"));
    CHECK(!has(kdv1.out, "after dividing"));

    RunResult kdv2 = run({"travelling", "--model", "kdv", "--epsilon", "2"});
    CHECK(kdv2.code == 0);
    CHECK(has(kdv2.out, "first integral: none found"));
}

TEST_CASE("verify checks the residual and the numeric window") {
    RunResult trav = run({"verify", "--model", "burgers", "--epsilon", "2", "--ansatz",
                          "travelling", "--lambda2", "0", "--order", "10"});
    CHECK(trav.code == 0);
    CHECK(has(trav.out, "residual: zero at every solved order (0..10)"));
    CHECK(has(trav.out, "max relative deviation:"));
    CHECK(has(trav.out, "verify: PASS"));

    RunResult reduced = run({"verify", "--model", "burgers", "--epsilon", "2", "--order", "8"});
    CHECK(reduced.code == 0);
    CHECK(has(reduced.out, "residual: zero at every solved order (0..8)"));
    CHECK(has(reduced.out, "numeric check: skipped"));
}

TEST_CASE("usage problems exit with code 2") {
    RunResult none = run({});
    CHECK(none.code == 2);

    RunResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(!unknown.err.empty());

    RunResult badeps = run({"balance", "--model", "burgers", "--epsilon", "x"});
    CHECK(badeps.code == 2);
    CHECK(has(badeps.err, "--epsilon"));

    RunResult badfmt = run({"expand", "--model", "burgers", "--format", "yaml"});
    CHECK(badfmt.code == 2);

    RunResult badlam = run({"expand", "--model", "kdv", "--epsilon", "2", "--lambda2", "0"});
    CHECK(badlam.code == 2);
    CHECK(has(badlam.err, "--lambda2"));

    RunResult badcsv = run({"balance", "--model", "burgers", "--format", "csv"});
    CHECK(badcsv.code == 2);
    CHECK(has(badcsv.err, "csv output is only available for converge"));
}

TEST_CASE("help is printed on request") {
    RunResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(has(top.out, "balance"));
    CHECK(has(top.out, "verify"));

    RunResult sub = run({"expand", "--help"});
    CHECK(sub.code == 0);
    CHECK(has(sub.out, "--lambda2"));
}

TEST_CASE("results can be written to a file") {
    TempFile sink("cli_test_out.json", "");
    RunResult r = run({"classify", "--model", "burgers", "--epsilon", "2", "--format", "json",
                       "--out", sink.path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(sink.path);
    std::stringstream buf;
    buf << in.rdbuf();
    Report rep = parse_report(buf.str());
    CHECK(rep.verdict == "PASSES");
    CHECK(rep.model == "burgers");

    RunResult bad = run({"balance", "--model", "burgers", "--out", "/no_such_dir_zz/x.txt"});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "cannot open output path"));
}
