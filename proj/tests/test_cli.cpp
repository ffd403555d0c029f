#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(BIGCELL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    return std::string(BIGCELL_TEST_DATA) + "/" + name;
}

} // namespace

TEST_CASE("f-eval on the identity") {
    RunResult r = run_cli("f-eval --group sl2-borel --in " + data_file("sl2_identity.json"));
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value") == "1");
    CHECK(j.at("valuation") == "0");
}

TEST_CASE("f-eval matches the worked example") {
    RunResult r = run_cli("f-eval --group sl2-borel --in " + data_file("sl2_example.json"));
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value") == "9");
    CHECK(j.at("valuation") == "2");
    RunResult c = run_cli("f-eval --group sl2-borel --closed-form --in " +
                          data_file("sl2_example.json"));
    CHECK(nlohmann::json::parse(c.out) == j);
}

TEST_CASE("factorize round trips through the emitted pieces") {
    RunResult r = run_cli("factorize --group sl2-borel --in " + data_file("sl2_example.json"));
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("u_minus").at("entries")[0][1] == "2/3");
    CHECK(j.at("levi").at("entries")[0][0] == "1/3");
    CHECK(j.at("levi").at("entries")[1][1] == "3");
    CHECK(j.at("u_plus").at("entries")[1][0] == "1/3");
}

TEST_CASE("factorize rejects points off the big cell") {
    RunResult r = run_cli("factorize --group sl2-borel --in " + data_file("sl2_weyl.json"));
    CHECK(r.status == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("f-eval --group sl2-borel --in /nonexistent.json").status == 2);
    CHECK(run_cli("f-eval --group bogus --in " + data_file("sl2_identity.json")).status == 2);
    CHECK(run_cli("nonsense").status == 2);
    CHECK(run_cli("f-eval --group sl2-borel --in " + data_file("malformed.json")).status == 2);
}

TEST_CASE("lemma suite passes and is byte-deterministic") {
    const std::string args = "lemma-suite --group sl2-borel --samples 6 --seed 7";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("seed") == 7);
}

TEST_CASE("cocycle test on the symplectic datum") {
    RunResult r = run_cli("cocycle-test --group sp4-siegel --samples 5 --seed 3 --e 2");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).at("pass") == true);
}

TEST_CASE("star and jfactor agree with the frozen example") {
    RunResult s = run_cli("star --group sl2-borel --e 2 --g " + data_file("sl2_weyl.json") +
                          " --u " + data_file("sl2_point_t.json"));
    REQUIRE(s.status == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js.at("entries")[0][1] == "-1/3*t");   // -1/t over t^2 = 3

    RunResult j = run_cli("jfactor --group sl2-borel --e 2 --g " + data_file("sl2_weyl.json") +
                          " --u " + data_file("sl2_point_t.json"));
    REQUIRE(j.status == 0);
    auto jj = nlohmann::json::parse(j.out);
    CHECK(jj.at("entries")[0][0] == "1/3*t");
    CHECK(jj.at("entries")[1][1] == "t");
    CHECK(jj.at("entries")[0][1] == "0");
}

TEST_CASE("omega-check verdicts") {
    RunResult member = run_cli("omega-check --group sl2-borel --e 2 --m 1 --u " +
                               data_file("sl2_point_t.json"));
    REQUIRE(member.status == 0);
    CHECK(nlohmann::json::parse(member.out).at("member") == true);

    RunResult rejected = run_cli("omega-check --group sl2-borel --m 0 --u " +
                                 data_file("sl2_point_one.json"));
    REQUIRE(rejected.status == 0);
    auto j = nlohmann::json::parse(rejected.out);
    CHECK(j.at("member") == false);
    CHECK(j.contains("violation"));

    RunResult with_reps = run_cli("omega-check --group sl2-borel --m 0 --u " +
                                  data_file("sl2_point_one.json") + " --reps " +
                                  data_file("reps_custom.json"));
    REQUIRE(with_reps.status == 0);
    CHECK(nlohmann::json::parse(with_reps.out).at("member") == false);
}

TEST_CASE("duality suite through the CLI") {
    RunResult r = run_cli("duality-suite --group sl2-borel --e 2 --samples 4 --seed 11 "
                          "--sigma \"{\\\"type\\\":\\\"det_power\\\",\\\"weights\\\":[0,2]}\"");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).at("pass") == true);
}

TEST_CASE("guard bits abort oversized computations") {
    RunResult r = run_cli("--guard-bits 12 f-eval --group sl2-borel --in " +
                          data_file("sl2_big.json"));
    CHECK(r.status == 3);
    // generous guard: same input goes through
    RunResult ok = run_cli("--guard-bits 100000 f-eval --group sl2-borel --in " +
                           data_file("sl2_big.json"));
    CHECK(ok.status == 0);
}
