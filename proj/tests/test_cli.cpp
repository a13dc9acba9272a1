#include <doctest.h>

#include "rsum/numbers.hpp"
#include "rsum/ramanujan.hpp"
#include "rsum/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace rsum;
using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string cli_path() {
    const char* p = std::getenv("RSUM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "RSUM_CLI must point at the command line binary");
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("RSUM_GOLDEN");
    REQUIRE_MESSAGE(p != nullptr, "RSUM_GOLDEN must point at the golden file directory");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file: ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational rat_from_json(const json& j) {
    return Rational(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}

}  // namespace

TEST_CASE("value subcommands print exact rationals") {
    CHECK(run("bernoulli --n 12").output == "bernoulli = -691/2730\n");
    CHECK(run("gregory --n 5 --signed").output == "gregory = -3/160\n");
    CHECK(run("gregory --n 5").output == "gregory = 3/160\n");
    CHECK(run("hirzebruch --k 6").output == "hirzebruch = 60480\n");
    CHECK(run("extgregory --s 2 --n 4").output == "extgregory = -6911/518400\n");
    CHECK(run("extgregory --s 2 --n 4 --paper-form").output == "extgregory = -6911/720^2\n");
    CHECK(run("eulerian --n 4").output == "P_4(x) = 1 + 11*x + 11*x^2 + x^3\n");
    CHECK(run("gregory-poly --m 2").output == "G_2(u) = -5/24 + 1/8*u\n");
    CHECK(run("gregory-poly --m 2 --u 1").output == "gregory-poly = -1/12\n");
}

TEST_CASE("smooth reports every applicable method") {
    RunResult r = run("smooth figurate --k 5 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "closed = -3/160\n"
          "asymptotic = -3/160\n"
          "intuitive = -3/160\n"
          "bernoulli = -3/160\n");
    CHECK(run("smooth power --k 8 --method regularize").output == "regularized = 1/240\n");
    CHECK(run("smooth figurate --k 3 --m 2").output == "closed = 1/24\n");
}

TEST_CASE("json output round trips to exact values") {
    RunResult r = run("smooth power --k 4 --method all --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("op") == "smooth");
    CHECK(j.at("family") == "power");
    CHECK(j.at("k") == 4);
    REQUIRE(j.at("results").size() == 4);
    for (const auto& entry : j.at("results"))
        CHECK(rat_from_json(entry.at("value")) == closed_power_sum(4));

    json b = json::parse(run("bernoulli --n 12 --format json").output);
    CHECK(rat_from_json(b.at("value")) == numbers::bernoulli(12));

    json e = json::parse(run("expand --expr \"x/(1-x)^2\" --gauge --order 6 --format json").output);
    CHECK(rat_from_json(e.at("constant")) == Rational(-1, 12));
    REQUIRE(e.at("divergent").size() == 2);
    CHECK(e.at("divergent")[0].at("power") == -2);
    CHECK(rat_from_json(e.at("divergent")[0].at("coeff")) == 1);
    CHECK(rat_from_json(e.at("divergent")[1].at("coeff")) == 0);
    CHECK(e.at("tail").size() == 4);
    CHECK(rat_from_json(e.at("tail")[1].at("coeff")) == Rational(1, 240));
}

TEST_CASE("csv output is one index,value row per line") {
    CHECK(run("coeffs --expr \"x/(1-x)^3\" --n 5 --format csv").output ==
          "0,0\n1,1\n2,3\n3,6\n4,10\n");
    CHECK(run("bernoulli --n 4 --format csv").output == "bernoulli,-1/30\n");
}

TEST_CASE("tables match the golden files") {
    CHECK(run("table 1").output == read_file(golden_dir() + "/table1.txt"));
    CHECK(run("table 4").output == read_file(golden_dir() + "/table4.txt"));
    CHECK(run("table 5").output == read_file(golden_dir() + "/table5.txt"));
    CHECK(run("table 5 --paper-form").output == read_file(golden_dir() + "/table5_paper.txt"));
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run("").exit_code == 1);
    CHECK(run("smooth power").exit_code == 1);
    CHECK(run("smooth power --k 3 --method nonsense").exit_code == 1);

    RunResult parse = run("coeffs --expr \"x/(1-\" --n 3");
    CHECK(parse.exit_code == 2);
    CHECK(parse.output.find("byte 5") != std::string::npos);

    CHECK(run("smooth figurate --k 3 --method regularize").exit_code == 3);
    CHECK(run("smooth power --k 0").exit_code == 3);
    CHECK(run("expand --expr \"x/(1-x)^3\" --gauge --order 1").exit_code == 3);

    CHECK(run("verify --suite all").exit_code == 0);
}

TEST_CASE("injected faults surface as consistency failures") {
    RunResult r = run("--inject-fault gregory:4 verify --suite tables");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("FAIL") != std::string::npos);

    RunResult s = run("--inject-fault bernoulli:6 smooth power --k 6 --method all");
    CHECK(s.exit_code == 4);

    RunResult e = run("--inject-fault eulerian:5 verify --suite identities");
    CHECK(e.exit_code == 4);

    // The same invocations are clean without the fault.
    CHECK(run("verify --suite tables").exit_code == 0);
    CHECK(run("smooth power --k 6 --method all").exit_code == 0);
}
