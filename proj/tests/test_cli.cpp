#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// runs the tool through /bin/sh with stderr folded into stdout
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + MSECT_CLI_PATH + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return {};
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("decide") {
    RunResult r = run("decide --a 1/2 --m 3");
    REQUIRE(r.code == 0);
    json v = json::parse(r.out);
    CHECK(v["field"] == "Q");
    CHECK(v["a"] == "1/2");
    CHECK(v["m"] == 3);
    CHECK(v["m_odd"] == 3);
    CHECK(v["sectable"] == false);
    CHECK(v["witness"].is_null());
    CHECK(v["certificate"]["candidates"] == 8);

    r = run("decide --a=-23/27 --m 6");
    REQUIRE(r.code == 0);
    v = json::parse(r.out);
    CHECK(v["sectable"] == true);
    CHECK(v["witness"] == "1/3");
    CHECK(v["certificate"].is_null());

    r = run("decide --a \"1/2*sqrt(2)\" --m 3 --field \"Q(sqrt 2)\"");
    REQUIRE(r.code == 0);
    v = json::parse(r.out);
    CHECK(v["field"] == "Q(sqrt 2)");
    CHECK(v["sectable"] == true);
    CHECK(v["witness"] == "-1/2*sqrt(2)");

    r = run("decide --a 1/2 --m 3 --field \"Q(sqrt 2)\"");
    v = json::parse(r.out);
    CHECK(v["sectable"] == false);
}

TEST_CASE("chebyshev printing") {
    RunResult r = run("chebyshev --m 6");
    CHECK(r.code == 0);
    CHECK(r.out == "32*x^6-48*x^4+18*x^2-1\n");
    r = run("chebyshev --m 6 --kind u");
    CHECK(r.out == "32*x^5-32*x^3+6*x\n");
    r = run("chebyshev --m 0 --kind u");
    CHECK(r.out == "0\n");
}

TEST_CASE("roots") {
    RunResult r = run("roots --poly \"-1-6*x+8*x^3\"");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    r = run("roots --poly \"-1-x+2*x^2\"");
    CHECK(r.out == "-1/2\n1\n");
    r = run("roots --poly \"-2+1*x^2\" --field \"Q(sqrt 2)\"");
    CHECK(r.out == "-1*sqrt(2)\n1*sqrt(2)\n");
}

TEST_CASE("census and enumerate") {
    RunResult r = run("census --field Q --B 1,2,3");
    CHECK(r.code == 0);
    CHECK(r.out == "field,B,total,in_unit\nQ,1/1,3,3\nQ,2/1,7,5\nQ,3/1,15,9\n");
    r = run("enumerate --field \"Q(sqrt 2)\" --B 2");
    CHECK(r.out == "-1\n0\n1\n-1*sqrt(2)\n-1/2*sqrt(2)\n1/2*sqrt(2)\n1*sqrt(2)\n");
}

TEST_CASE("sharding leaves output byte-identical") {
    std::string base = run("census --field \"Q(sqrt 5)\" --B 1:8:x2").out;
    CHECK(run("census --field \"Q(sqrt 5)\" --B 1:8:x2 --shards 4").out == base);
    CHECK(run("census --field \"Q(sqrt 5)\" --B 1:8:x2", "MSECT_SHARDS=3").out == base);
    CHECK(run("enumerate --field \"Q(sqrt 2)\" --B 5 --shards 5").out ==
          run("enumerate --field \"Q(sqrt 2)\" --B 5").out);
    // out-of-range worker counts are usage errors
    CHECK(run("census --field Q --B 5", "MSECT_SHARDS=99").code == 2);
    CHECK(run("census --field Q --B 5", "MSECT_SHARDS=banana").code == 2);
    CHECK(run("census --field Q --B 5 --shards 0").code == 2);
}

TEST_CASE("density to fit pipeline") {
    const std::string csv = "cli_density_tmp.csv", svg = "cli_density_tmp.svg";
    RunResult r = run("density --field Q --m 3 --grid 32:256:x2 --out " + csv);
    REQUIRE(r.code == 0);
    std::string body = slurp(csv);
    CHECK(body.substr(0, 47) == "field,m,m_odd,B,numerator,denominator,delta,del");
    CHECK(body.find("Q,3,3,32/1,15,649,15/649,") != std::string::npos);
    // delta is kept in lowest terms: 39/39897 reduces to 1/1023
    CHECK(body.find("Q,3,3,256/1,39,39897,1/1023,") != std::string::npos);

    r = run("fit --in " + csv + " --plot " + svg);
    REQUIRE(r.code == 0);
    json v = json::parse(r.out);
    CHECK(v["m"] == 3);
    CHECK(v["points_used"] == 4);
    double slope = v["fitted_slope"];
    CHECK(std::fabs(slope - v["theoretical_slope"].get<double>()) < 0.3);
    CHECK(v["theoretical_slope"].get<double>() == doctest::Approx(-4.0 / 3.0));
    std::string plot = slurp(svg);
    CHECK(plot.substr(0, 4) == "<svg");
    CHECK(plot.find("stroke-dasharray=\"6,4\"") != std::string::npos);
    std::remove(csv.c_str());
    std::remove(svg.c_str());
}

TEST_CASE("schanuel") {
    RunResult r = run("schanuel --field Q --grid 50,100");
    REQUIRE(r.code == 0);
    json v = json::parse(r.out);
    CHECK(v["samples"].size() == 2);
    CHECK(v["closest_constant"] == "12/pi^2");
    CHECK(v["drift"].is_number());
}

TEST_CASE("witness") {
    RunResult r = run("witness --m 12");
    REQUIRE(r.code == 0);
    json v = json::parse(r.out);
    CHECK(v["m"] == 12);
    CHECK(v["k"] == 2);
    CHECK(v["n"] == 3);
    CHECK(v["a"] == "329/729");
    CHECK(v["nu3_exponent"] == -6);
    CHECK(v["sectable"] == true);
    CHECK(v["witness"] == "-7/9");
    CHECK(v["naive_full_degree_root"] == false);
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify --seed 123");
    CHECK(r.code == 0);
    CHECK(r.out.find("checks passed (seed 123)") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);                                   // subcommand required
    CHECK(run("frobnicate").code == 2);                         // unknown subcommand
    CHECK(run("decide --a 1/2").code == 2);                     // missing --m
    CHECK(run("decide --a 3/2 --m 3").code == 2);               // |a| > 1
    CHECK(run("decide --a 1/2 --m 3 --nope").code == 2);        // unknown flag
    CHECK(run("decide --a 1/2 --m 3 --field \"Q(sqrt 8)\"").code == 2);
    CHECK(run("chebyshev --m 4 --kind z").code == 2);
    CHECK(run("roots --poly \"2**x\"").code == 2);
    CHECK(run("census --field Q --B 8,4").code == 2);
    CHECK(run("fit --in does_not_exist.csv").code == 2);
    CHECK(run("witness --m 8").code == 2);                      // power of two
    CHECK(run("--help").code == 0);
    CHECK(run("decide --help").code == 0);
}
