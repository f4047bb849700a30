/**
 * @file test_cli.cpp
 * @brief End-to-end checks of the command-line tool: exit codes, output formats and determinism.
 */

#include "catch_amalgamated.hpp"

#include "dcp/io/json.hpp"
#include "dcp/known_results.hpp"

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

using namespace dcp;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

std::string cli() {
    const char* path = std::getenv("DCP_CLI");
    REQUIRE(path != nullptr);
    return path;
}

Run run(const std::string& args) {
    Run r;
    std::string cmd = cli() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with status 2", "[cli]") {
    CHECK(run("").status == 2);
    CHECK(run("--bogus").status == 2);
    CHECK(run("specialize --r 1.75").status == 2);
    CHECK(run("exponents --r 3").status == 2);
    CHECK(run("repro table9").status == 2);
    CHECK(run("series --format xml").status == 2);
}

TEST_CASE("help exits with status 0", "[cli]") {
    Run r = run("--help");
    CHECK(r.status == 0);
    CHECK(r.out.find("guess-ode") != std::string::npos);
}

TEST_CASE("series output matches the printed expansion and is deterministic", "[cli][series]") {
    Run a = run("series --m 1 --y 1 --order 20");
    REQUIRE(a.status == 0);
    BivariateSeries s = io::bivariate_from_json(nlohmann::json::parse(a.out));
    REQUIRE(s.order == 20);
    auto rows = known::s11_rows();
    for (std::size_t n = 0; n < rows.size(); ++n) CHECK(s.rows[n] == rows[n]);
    Run b = run("series --m 1 --y 1 --order 20");
    CHECK(a.out == b.out);
}

TEST_CASE("specialize prints the r = 2 coefficients", "[cli][series]") {
    Run a = run("specialize --r 2 --order 13");
    REQUIRE(a.status == 0);
    RatSeries s = io::rat_series_from_json(nlohmann::json::parse(a.out));
    auto expected = known::r2_series();
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.coeffs[i] == Rat(expected[i]));
}

TEST_CASE("falsified hypotheses exit with status 1", "[cli]") {
    CHECK(run("guess-ode --r 3 --k 1 --degree 4 --exact -q").status == 1);
}

TEST_CASE("exponents at 1/2 for r = 7/4", "[cli][singularity]") {
    Run a = run("exponents --r 7/4 --point 1/2 -q");
    CHECK(a.status == 0);
    CHECK(a.out.find("-1, 1, 1, 3") != std::string::npos);
}

TEST_CASE("reproduction bundles", "[cli][repro]") {
    SECTION("fig2 emits a CSV") {
        Run a = run("repro fig2");
        CHECK(a.status == 0);
        CHECK(a.out.rfind("p,value,denominator\n", 0) == 0);
        CHECK(a.out.find("\n0,1,1\n") != std::string::npos);
    }
    SECTION("recurrence bundle passes") {
        Run a = run("repro eq-recurrence");
        CHECK(a.status == 0);
        CHECK(a.out.find("ok   inhomogeneous ODE") != std::string::npos);
    }
}
