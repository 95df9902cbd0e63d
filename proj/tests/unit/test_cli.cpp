#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lefschetz/parse.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LEFSCHETZ_CLI_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("hilbert subcommand on the worked sextic") {
    const auto res = run_cli(
        "hilbert --vars x0,x1,x2,u,v --form "
        "\"5*u^3*v^2*x0 + u^5*x1 + v^5*x1 + 2*u*v^4*x2 - 3*u^3*v^2*x2 + u^6 - 3*u^2*v^4\"");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("(1,5,8,8,8,5,1)") != std::string::npos);
}

TEST_CASE("wlp subcommand reports the failing certificate") {
    const auto res = run_cli(
        "wlp --vars x0,x1,x2,u,v --form \"u^6*x0 + u^3*v^3*x1 + v^6*x2\" --json");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    REQUIRE(report["results"]["verdicts"]["wlp"]["status"] == "Fails");
    REQUIRE(report["results"]["hvector"] == json::array({1, 5, 7, 9, 9, 7, 5, 1}));
}

TEST_CASE("waring subcommand decomposes the cubic example") {
    const auto res = run_cli("waring --form \"u^3+3*u*v^2\" --bvars u,v --json");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    REQUIRE(report["results"]["border_rank"] == 2);
    REQUIRE(report["results"]["decomposition"]["exactness"] == "ExactQ");
    REQUIRE(report["results"]["decomposition"]["terms"].size() == 2);
}

TEST_CASE("json reports echo a re-parseable form") {
    const auto res = run_cli(
        "hilbert --vars x,y,z,u,v --form \"u^2*x + u*v*y + v^2*z\" --json");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    const std::string echoed = report["form"];
    const auto f = lefschetz::parse_form(echoed, {"x", "y", "z", "u", "v"});
    REQUIRE(f.str() == echoed);
    REQUIRE(report["results"]["hvector"] == json::array({1, 5, 5, 1}));
}

TEST_CASE("seeded runs are byte-identical") {
    const std::string args =
        "wlp --vars x0,x1,x2,u,v --form \"u^5*x0 + u^4*v*x0 + u^3*v^2*x1 + v^5*x2\" "
        "--seed 12345 --json";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
}

TEST_CASE("input errors exit with status two") {
    REQUIRE(run_cli("hilbert --vars x,y --form \"x^2 + y^3\"").exit_code == 2);
    REQUIRE(run_cli("hilbert --vars x,y --form \"q^2\"").exit_code == 2);
    REQUIRE(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("form files drive batch mode") {
    const std::string path = "cli_batch_input.txt";
    {
        std::ofstream out(path);
        out << "x^2 + y^2\n";
        out << "x^3 + x*y^2\n";
    }
    const auto res = run_cli("hilbert --vars x,y --form-file " + path + " --json");
    std::remove(path.c_str());
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    REQUIRE(report["forms"].size() == 2);
    REQUIRE(report["results"].size() == 2);
    REQUIRE(report["results"][0]["hvector"] == json::array({1, 2, 1}));
}

TEST_CASE("sequence subcommands") {
    REQUIRE(run_cli("sequence expand --m 6 --s 3").out.find("bracket: 7") != std::string::npos);
    REQUIRE(run_cli("sequence o-check --hvector 1,5,8,6,8,5,1").out.find(": no") !=
            std::string::npos);
    REQUIRE(run_cli("sequence si-check --hvector 1,5,6,6,5,1").out.find(": yes") !=
            std::string::npos);
}

TEST_CASE("perazzo subcommands") {
    const auto res = run_cli("perazzo minimal --family II --d 6 --json");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    REQUIRE(report["results"]["hvector"] == json::array({1, 5, 6, 6, 6, 5, 1}));

    const auto blocks = run_cli(
        "perazzo blocks --p0 \"u^2\" --p1 \"u*v\" --p2 \"v^2\" --bvars u,v --k 1 --json");
    REQUIRE(blocks.exit_code == 0);
    const json rep2 = json::parse(blocks.out);
    REQUIRE(rep2["results"]["matrices"]["M"]["cols"] == 3);
}

TEST_CASE("gn subcommands") {
    const auto res = run_cli(
        "gn svs --vars x,y,z,u,v --form \"u^2*x + u*v*y + v^2*z\" --json");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    REQUIRE(report["results"]["relation"] == "y0*y2 - y1^2");
    REQUIRE(report["results"]["system"][0] == "v^2");
}
