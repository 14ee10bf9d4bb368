#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"

using nlohmann::ordered_json;
using testutil::contains;

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

// Runs the installed binary through the shell with NO_COLOR set, capturing
// stdout and stderr together, and returns the exit code.
RunResult run_cli(const std::string& args, const std::string& stdin_data = "")
{
    std::string cmd = "NO_COLOR=1 " NJUMP_CLI_PATH " " + args + " 2>&1";
    if (!stdin_data.empty())
        cmd = "printf '%s' '" + stdin_data + "' | " + cmd;

    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

ordered_json parse_json(const RunResult& res)
{
    REQUIRE(res.code == 0);
    return ordered_json::parse(res.output);
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("nu prints the newton number")
{
    auto res = run_cli("nu 'x^11 + y^6 + z^5'");
    CHECK(res.code == 0);
    CHECK(res.output == "200\n");

    CHECK(run_cli("nu --triple 11,6,5").output == "200\n");
    CHECK(run_cli("nu 'x^4 + y^4' --dim 2").output == "9\n");
    CHECK(run_cli("nu -", "x^2+y^2+z^2").output == "1\n");
}

TEST_CASE("nu emits metrics as json")
{
    auto j = parse_json(run_cli("nu 'x^11 + y^6 + z^5' --format json"));
    CHECK(j["nu"] == 200);
    CHECK(j["metrics"]["V"] == "55");
    CHECK(j["metrics"]["P"] == ordered_json::array({"33", "55/2", "15"}));
    CHECK(j["metrics"]["W"] == ordered_json::array({11, 6, 5}));
}

TEST_CASE("jump reports json by default")
{
    auto j = parse_json(run_cli("jump 'x^11 + y^6 + z^5'"));
    CHECK(j["nu"] == 200);
    CHECK(j["lambda_nd"] == 3);
    CHECK(j["method"] == "fastpath");
    CHECK(j["realizing"] == ordered_json::array({ordered_json::array({1, 3, 2})}));
    CHECK(j["candidates"] == 3);
    REQUIRE(j["trace"].size() == 3);
    CHECK(j["trace"][0]["i0"] == 1);
    CHECK(j["trace"][0]["success"] == false);
    CHECK(j["trace"][2]["i0"] == 3);
    CHECK(j["trace"][2]["a"] == 10);
    CHECK(j["trace"][2]["b"] == -3);
    CHECK(j["trace"][2]["c"] == -2);
    CHECK(j["trace"][2]["value"] == 3);
    CHECK(j["trace"][2]["success"] == true);
    CHECK(!j.contains("mu"));
}

TEST_CASE("jump engines can be forced")
{
    auto brute = parse_json(run_cli("jump 'x^11 + y^6 + z^5' --engine bruteforce"));
    CHECK(brute["lambda_nd"] == 3);
    CHECK(brute["method"] == "bruteforce");
    CHECK(brute["candidates"] == 101);
    auto realizing = brute["realizing"];
    bool found = false;
    for (const auto& e : realizing)
        if (e == ordered_json::array({1, 3, 2}))
            found = true;
    CHECK(found);

    // The deformed support has three facets, so the fastpath refuses it.
    auto refuse = run_cli("jump 'x^11 + y^6 + z^5 + x*y^3*z^2' --engine fastpath");
    CHECK(refuse.code == 3);
    CHECK(contains(refuse.output, "fastpath engine requires a one-face support"));

    // But auto quietly falls back to the scan.
    auto fallback = parse_json(run_cli("jump 'x^11 + y^6 + z^5 + x*y^3*z^2'"));
    CHECK(fallback["method"] == "bruteforce");
    CHECK(fallback["nu"] == 197);

    // A permuted one-face germ is recognized and unpermuted.
    auto turned = parse_json(run_cli("jump 'x^5 + y^11 + z^6'"));
    CHECK(turned["method"] == "fastpath");
    CHECK(turned["lambda_nd"] == 3);
    CHECK(turned["realizing"] == ordered_json::array({ordered_json::array({2, 1, 3})}));
}

TEST_CASE("jump text format and trace flag")
{
    auto res = run_cli("jump 'x^11 + y^6 + z^5' --format text");
    CHECK(res.code == 0);
    CHECK(contains(res.output, "nu          200"));
    CHECK(contains(res.output, "lambda_nd   3"));
    CHECK(contains(res.output, "method      fastpath"));
    CHECK(contains(res.output, "realizing   (1,3,2)"));
    CHECK(contains(res.output, "i0=3"));

    auto traced = run_cli("jump 'x^4 + y^4' --dim 2 --engine bruteforce --format text --trace");
    CHECK(contains(traced.output, "lambda_nd   3"));
    CHECK(contains(traced.output, "trace:"));
    CHECK(contains(traced.output, "(0,3)  nu_after=6  jump=3"));
}

TEST_CASE("jump with a known milnor number")
{
    auto above = parse_json(run_cli("jump --triple 11,6,5 --mu 205"));
    CHECK(above["lambda_nd"] == 5);
    CHECK(above["mu"] == 205);
    CHECK(above["realizing"] == ordered_json::array());
    CHECK(above["method"] == "bruteforce");

    auto same = parse_json(run_cli("jump --triple 11,6,5 --mu 200"));
    CHECK(same["lambda_nd"] == 3);
    CHECK(same["mu"] == 200);

    auto below = run_cli("jump --triple 11,6,5 --mu 199");
    CHECK(below.code == 3);
    CHECK(contains(below.output, "below the newton number"));

    auto conflict = run_cli("jump --triple 11,6,5 --mu 200 --engine fastpath");
    CHECK(conflict.code == 3);
    CHECK(contains(conflict.output, "degenerate entry point"));
}

TEST_CASE("exit codes follow the error taxonomy")
{
    CHECK(run_cli("nu 'x + + y'").code == 1);             // parse
    CHECK(run_cli("nu 'x^2 + y^2'").code == 2);           // not convenient
    CHECK(run_cli("jump 'x + y^2 + z^2'").code == 3);     // smooth germ
    CHECK(run_cli("nu --triple 1,2").code == 1);          // malformed triple
    CHECK(run_cli("nu --triple 11,6,5 --dim 2").code == 3);
    CHECK(run_cli("nu").code == 1);                       // no input
    CHECK(run_cli("").code == 1);                         // missing subcommand
    CHECK(run_cli("nu 'x^2+y^2+z^2' --format yaml").code == 1);

    auto err = run_cli("nu 'x^2 + y^2'");
    CHECK(contains(err.output, "njump: error:"));
    CHECK(contains(err.output, "convenient"));
    // NO_COLOR is set: no escape sequences anywhere.
    CHECK(!contains(err.output, "\033["));
}

TEST_CASE("candidates lists gamma-minus points")
{
    auto res = run_cli("candidates 'x^2 + y^2 + z^2'");
    CHECK(res.code == 0);
    CHECK(contains(res.output, "(nu = 1)"));
    CHECK(contains(res.output, "total 9 candidates"));
    CHECK(contains(res.output, "(0,0,1)  0  1"));

    auto j = parse_json(run_cli("candidates 'x^2 + y^2 + z^2' --format json"));
    CHECK(j["dimension"] == 3);
    CHECK(j["count"] == 9);
    REQUIRE(j["candidates"].size() == 9);
    CHECK(j["candidates"][0]["exponent"] == ordered_json::array({0, 0, 1}));
    CHECK(j["candidates"][0]["jump"] == 1);
}

TEST_CASE("render produces svg, obj and json")
{
    auto svg = run_cli("render 'x^4 + y^4 + x*y' --dim 2");
    CHECK(svg.code == 0);
    CHECK(contains(svg.output, "<svg xmlns"));
    CHECK(contains(svg.output, "class=\"face\""));
    CHECK(contains(svg.output, "</svg>"));

    auto obj = run_cli("render 'x^11 + y^6 + z^5'");
    CHECK(obj.code == 0);
    CHECK(contains(obj.output, "v 0 0 0"));
    CHECK(contains(obj.output, "v 11 0 0"));
    CHECK(contains(obj.output, "g diagram"));
    CHECK(contains(obj.output, "g walls"));
    CHECK(contains(obj.output, "f "));

    auto j = parse_json(run_cli("render 'x^11 + y^6 + z^5' --format json"));
    CHECK(j["dimension"] == 3);
    CHECK(j["convenient"] == true);
    REQUIRE(j["facets"].size() == 1);
    CHECK(j["facets"][0]["normal"] == ordered_json::array({30, 55, 66}));
    CHECK(j["facets"][0]["offset"] == 330);
    CHECK(j["axis_intercepts"] == ordered_json::array({11, 6, 5}));
    CHECK(j["nu"] == 200);
    CHECK(j["metrics"]["V"] == "55");

    // Mismatched format and dimension.
    CHECK(run_cli("render 'x^11 + y^6 + z^5' --format svg").code == 3);
    CHECK(run_cli("render 'x^4 + y^4' --dim 2 --format obj").code == 3);
}

TEST_CASE("sweep runs triples and cross-checks engines")
{
    auto res = run_cli("sweep --p 5..7 --q 3..4 --r 2..3 --coprime-only --check");
    CHECK(res.code == 0);
    CHECK(contains(res.output, "5 3 2  lambda=1  (3,1,0)  fastpath  ok"));
    CHECK(contains(res.output, "5 4 3  lambda="));
    CHECK(contains(res.output, "7 3 2  lambda="));
    CHECK(contains(res.output, "7 4 3  lambda="));
    CHECK(contains(res.output, "4 triples; engines agree on all rows"));

    // The worker pool returns rows in deterministic order.
    auto parallel = run_cli("sweep --p 5..7 --q 3..4 --r 2..3 --coprime-only --check --jobs 2");
    CHECK(parallel.code == 0);
    CHECK(parallel.output == res.output);

    // Without --coprime-only the scan falls back to brute force where needed.
    auto mixed = run_cli("sweep --p 4..4 --q 2..2 --r 2..2");
    CHECK(mixed.code == 0);
    CHECK(contains(mixed.output, "4 2 2  lambda="));
    CHECK(contains(mixed.output, "bruteforce"));
    CHECK(contains(mixed.output, "1 triples"));

    auto j = parse_json(run_cli("sweep --p 5..6 --q 3..3 --r 2..2 --check --format json"));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["p"] == 5);
    CHECK(j[0]["lambda_nd"] == 1);
    CHECK(j[0]["agree"] == true);
    CHECK(j[1]["p"] == 6);
    CHECK(j[1]["engine"] == "bruteforce"); // (6,3,2) shares factors
    CHECK(j[1]["agree"] == nullptr);

    auto bad = run_cli("sweep --p 5..5 --q 3..3 --r 1..2");
    CHECK(bad.code == 3);
    CHECK(contains(bad.output, "must start at 2 or above"));
}

TEST_CASE("version and help")
{
    auto version = run_cli("--version");
    CHECK(version.code == 0);
    CHECK(contains(version.output, "njump 0.1.0"));

    auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.output, "nu"));
    CHECK(contains(help.output, "jump"));
    CHECK(contains(help.output, "candidates"));
    CHECK(contains(help.output, "render"));
    CHECK(contains(help.output, "sweep"));
}

TEST_SUITE_END();
