#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using alphacalc::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("documented invocations match their golden outputs byte for byte") {
    Result deriv = invoke({"deriv", "--alpha", "1/2", "--expr", "x^(3/2)+2*x"});
    CHECK(deriv.code == 0);
    CHECK(deriv.out == golden("deriv_half.json"));

    Result check = invoke({"check", "leibnitz", "--cases", "500", "--seed", "42"});
    CHECK(check.code == 0);
    CHECK(check.out == golden("check_leibnitz_500_42.txt"));

    Result qpot = invoke({"qpot", "--alpha", "1", "--R", "1+x^2", "--Dalpha", "1/2",
                          "--hbar", "1", "--trunc", "12", "--grid", "0.1:0.9:0.1"});
    CHECK(qpot.code == 0);
    CHECK(qpot.out == golden("qpot_classical_grid.csv"));
}

TEST_CASE("repeat runs are byte-identical") {
    std::vector<std::vector<std::string>> cmds = {
        {"deriv", "--alpha", "1/2", "--expr", "x^(3/2)+2*x"},
        {"check", "leibnitz", "--cases", "100", "--seed", "42"},
        {"qpot", "--alpha", "1", "--R", "1+x^2", "--Dalpha", "1/2", "--hbar", "1",
         "--trunc", "12", "--grid", "0.1:0.9:0.1"},
        {"madelung", "--alpha", "1/2", "--R", "1", "--S", "3*x^(1/2)", "--St", "-5",
         "--V", "10+9/4", "--Dalpha", "1", "--hbar", "1"},
        {"exp", "--alpha", "2/3", "--terms", "8"},
    };
    for (const auto& cmd : cmds) {
        Result a = invoke(cmd);
        Result b = invoke(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("deriv emits the expected series") {
    Result r = invoke({"deriv", "--alpha", "1/2", "--expr", "x^(3/2)+2*x"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"domain\":\"exact\",\"ramification\":2,\"terms\":[{\"exp\":\"1/2\","
          "\"im\":\"0\",\"re\":\"2\"},{\"exp\":\"1\",\"im\":\"0\",\"re\":\"3/2\"}],"
          "\"trunc\":\"inf\"}\n");
}

TEST_CASE("exit codes: usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"deriv", "--alpha", "1/2"}).code == 2);            // missing --expr
    CHECK(invoke({"deriv", "--alpha", "5/4", "--expr", "x"}).code == 2);
    CHECK(invoke({"deriv", "--alpha", "1/2", "--expr", "x^^2"}).code == 2);
    CHECK(invoke({"deriv", "--alpha", "1/2", "--expr", "x", "--bogus", "1"}).code == 2);
    CHECK(invoke({"check", "nonsense", "--cases", "1"}).code == 2);
    CHECK(invoke({"qpot", "--alpha", "1", "--R", "1+x", "--Dalpha", "1/2",
                  "--grid", "oops"})
              .code == 2);

    Result r = invoke({"deriv", "--alpha", "0", "--expr", "x"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--alpha") != std::string::npos);
}

TEST_CASE("exit codes: domain errors") {
    CHECK(invoke({"integrate", "--alpha", "1/2", "--expr", "x^(-1/2)"}).code == 1);
    CHECK(invoke({"rl", "--alpha", "1/2", "--expr", "x^(-2)"}).code == 1);
    CHECK(invoke({"qpot", "--alpha", "1/2", "--R", "0", "--Dalpha", "1"}).code == 1);
    CHECK(invoke({"exp", "--alpha", "1/2", "--at", "-1"}).code == 1);
    CHECK(invoke({"qpot", "--alpha", "1", "--R", "1+x", "--Dalpha", "1/2",
                  "--grid", "0:1:0.5"})
              .code == 1);
}

TEST_CASE("integrate and rl subcommands") {
    Result integ = invoke({"integrate", "--alpha", "1/2", "--expr", "1"});
    CHECK(integ.code == 0);
    CHECK(integ.out.find("\"exp\":\"1/2\"") != std::string::npos);
    CHECK(integ.out.find("\"re\":\"2\"") != std::string::npos);

    Result rl = invoke({"rl", "--alpha", "1/2", "--expr", "x"});
    CHECK(rl.code == 0);
    // coefficient 2/sqrt(pi)
    auto pos = rl.out.find("\"re\":");
    REQUIRE(pos != std::string::npos);
    double coeff = std::stod(rl.out.substr(pos + 5));
    CHECK(std::abs(coeff - 2.0 / std::sqrt(M_PI)) < 1e-12);
}

TEST_CASE("madelung subcommand reports zero residuals on a solvable state") {
    Result r = invoke({"madelung", "--alpha", "1/2", "--R", "1", "--S", "3*x^(1/2)",
                       "--St", "-5", "--V", "10+9/4", "--Dalpha", "1", "--hbar", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"continuity\":{\"domain\":\"exact\",\"ramification\":1,"
                     "\"terms\":[]") != std::string::npos);
    CHECK(r.out.find("\"hamilton_jacobi\":") != std::string::npos);
    // both residual series have empty term lists
    CHECK(r.out.find("\"terms\":[]") != std::string::npos);
}

TEST_CASE("qpot without a grid emits the series") {
    Result r = invoke({"qpot", "--alpha", "1/2", "--R", "1+x", "--Dalpha", "3/2",
                       "--hbar", "2", "--trunc", "4"});
    CHECK(r.code == 0);
    // -(3/2 * 4) * (1/2) / (1 + x) = -3 + 3x - 3x^2 + 3x^3
    CHECK(r.out ==
          "{\"domain\":\"exact\",\"ramification\":2,\"terms\":[{\"exp\":\"0\","
          "\"im\":\"0\",\"re\":\"-3\"},{\"exp\":\"1\",\"im\":\"0\",\"re\":\"3\"},"
          "{\"exp\":\"2\",\"im\":\"0\",\"re\":\"-3\"},{\"exp\":\"3\",\"im\":\"0\","
          "\"re\":\"3\"}],\"trunc\":\"4\"}\n");
}

TEST_CASE("qpot grid sample hits the closed form") {
    Result r = invoke({"qpot", "--alpha", "1", "--R", "1+x^2", "--Dalpha", "1/2",
                       "--hbar", "1", "--trunc", "24", "--grid", "0.5:0.5:0.1"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header, row;
    std::getline(is, header);
    CHECK(header == "x,Q_alpha");
    std::getline(is, row);
    double x = 0, q = 0;
    CHECK(std::sscanf(row.c_str(), "%lf,%lf", &x, &q) == 2);
    CHECK(x == 0.5);
    CHECK(std::abs(q - (-0.8)) < 1e-6);
}

TEST_CASE("check subcommand failure reporting") {
    Result ok = invoke({"check", "rl-gap", "--cases", "3", "--seed", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("3/3") != std::string::npos);
}
