#include "doctest.h"

#include "cli.hpp"
#include "verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using zetadyn::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config_path(const std::string& name) { return std::string(ZETADYN_SOURCE_DIR) + "/configs/" + name; }

} // namespace

TEST_CASE("delta")
{
    auto r = call({"delta", "--group", "pm", "--terms", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("b: 1, 3, 1, 3, 1, 3") != std::string::npos);
    r = call({"delta", "--group", "z", "--terms", "4"});
    CHECK(r.out.find("b: 1, 0, 0, 0") != std::string::npos);
    r = call({"delta", "--group", "p2", "--terms", "4"});
    CHECK(r.out.find("first failure n=3") != std::string::npos);
    r = call({"--format", "csv", "delta", "--group", "pm", "--terms", "2"});
    CHECK(r.out == "# zetadyn-csv v1\nn,b,a\n1,1,1\n2,3,7\n");
    r = call({"--format", "csv", "integrality", "--group", "p2", "--terms", "5"});
    CHECK(r.out == "# zetadyn-csv v1\ngroup,delta_integer,delta_first_failure,zeta_integer,zeta_first_failure\np2,0,3,0,3\n");
}

TEST_CASE("unknown group")
{
    const auto r = call({"delta", "--group", "nope"});
    CHECK(r.code == 2);
    CHECK(r.err.find("heisenberg") != std::string::npos);
}

TEST_CASE("zeta")
{
    auto r = call({"zeta", "--action", "full-shift", "--group", "z_x_cyclic:3", "--alphabet", "2", "--terms", "9", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("definition: 1, 2, 4, 16, 32, 64, 192, 384, 768, 2048") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = call({"zeta", "--action", "full-shift", "--group", "dinf", "--alphabet", "1", "--terms", "7"});
    CHECK(r.out.find("1, 1, 2, 8/3, 25/6, 169/30, 361/45, 3364/315") != std::string::npos);

    r = call({"zeta", "--action", "toral", "--config", config_path("zx3.json"), "--terms", "12", "--method", "def"});
    CHECK(r.code == 0);
    CHECK(r.out.find("definition: 1, 1, 1, 10, 10, 10, 80, 80, 81, 618, 618, 627, 4733") != std::string::npos);

    r = call({"zeta", "--action", "full-shift", "--group", "z_x_cyclic:3", "--alphabet", "2", "--terms", "12", "--fit"});
    CHECK(r.out.find("(1 - 2z)^-1 (1 - 8z^3)^-1") != std::string::npos);

    r = call({"zeta", "--action", "toral", "--terms", "4"});
    CHECK(r.code == 2);
}

TEST_CASE("orbits")
{
    auto r = call({"--format", "json", "orbits", "--action", "full-shift", "--group", "z", "--alphabet", "2", "--max-size", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["orbit_sizes"]["1"] == "2");
    CHECK(j["orbit_sizes"]["4"] == "3");
    CHECK(j["pi"].back()["pi"] == "8");

    r = call({"orbits", "--action", "trivial", "--group", "pm", "--max-size", "4"});
    CHECK(r.out.find("pi(4) = 1") != std::string::npos);
}

TEST_CASE("table1 subcommand lists the tabulated orbits")
{
    const auto r = call({"table1", "--denominator", "30"});
    CHECK(r.code == 0);
    for (const char* p : {"1/15,29/30", "0,1/2", "2/3,2/3", "0,0"})
        CHECK_MESSAGE(r.out.find(p) != std::string::npos, p);
}

TEST_CASE("JSON output round-trips")
{
    const std::vector<std::vector<std::string>> cmds{
        {"--format", "json", "zeta", "--action", "full-shift", "--group", "dinf", "--alphabet", "1", "--terms", "7", "--method", "all"},
        {"--format", "json", "delta", "--group", "heisenberg", "--terms", "8"},
        {"--format", "json", "fix", "--action", "toral", "--config", config_path("dinf_torus.json"), "--max-index", "6"},
        {"--format", "json", "orbits", "--action", "projected", "--group", "z_x_cyclic:3", "--alphabet", "2", "--max-size", "6"},
        {"--format", "json", "growth", "--action", "full-shift", "--group", "z", "--alphabet", "2", "--max-index", "10"},
        {"--format", "json", "integrality", "--group", "p2", "--terms", "6"},
        {"--format", "json", "verify", "--suite", "paper-tables", "--only", "table5"},
    };
    for (const auto& c : cmds) {
        const auto r = call(c);
        CHECK_MESSAGE(r.code == 0, c[2]);
        CHECK_MESSAGE(nlohmann::ordered_json::parse(r.out).dump(2) + "\n" == r.out, c[2]);
    }
}

TEST_CASE("verify")
{
    auto r = call({"verify", "--suite", "paper-tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    for (const auto& id : zetadyn::cli::fixture_ids())
        CHECK(r.out.find("PASS " + id) != std::string::npos);

    r = call({"verify", "--suite", "paper-tables", "--only", "table1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS table1", 0) == 0);
    CHECK(r.out.find("table2") == std::string::npos);

    r = call({"verify", "--suite", "paper-tables", "--corrupt", "table2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL table2") != std::string::npos);

    CHECK(call({"verify", "--only", "table9"}).code == 2);
}

TEST_CASE("corrupting any fixture fails it")
{
    for (const auto& id : zetadyn::cli::fixture_ids()) {
        const auto results = zetadyn::cli::run_reference_suite({id, {id}});
        REQUIRE(results.size() == 1);
        CHECK_MESSAGE(!results.front().pass, id);
    }
}

TEST_CASE("term cap from the environment")
{
    setenv("ZETADYN_MAX_TERMS", "5", 1);
    const auto r = call({"zeta", "--group", "z", "--terms", "9"});
    unsetenv("ZETADYN_MAX_TERMS");
    CHECK(r.code == 2);
    CHECK(call({"zeta", "--group", "z", "--terms", "9"}).code == 0);
}
