#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "specht/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = specht::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count reproduces the worked example") {
    const auto result =
        run_cli({"count", "--core", "17,13,9,5^2,3^3,2^4,1^4", "-p", "5", "-w", "8"});
    CHECK(result.code == 0);
    CHECK(result.out == "83\n");
}

TEST_CASE("residual of the empty partition") {
    const auto result = run_cli({"residual", "-", "-p", "7"});
    CHECK(result.code == 0);
    CHECK(result.out.substr(0, 6) == "(1,1)\n");
}

TEST_CASE("domain errors exit with code 2") {
    const auto not_irreducible = run_cli({"decompose", "4,1", "-p", "5"});
    CHECK(not_irreducible.code == 2);
    CHECK(not_irreducible.err.find("not p-irreducible") != std::string::npos);

    CHECK(run_cli({"check", "3,1", "-p", "4"}).code == 2);
    CHECK(run_cli({"count", "--core", "5", "-p", "5", "-w", "1"}).code == 2);
    CHECK(run_cli({"enumerate", "--core", "-", "-p", "2", "-w", "2"}).code == 2);
    CHECK(run_cli({"hooks", "3,5"}).code == 2);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"count", "--core", "2"}).code == 1); // missing -p/-w
    CHECK(run_cli({}).code == 1);
}

TEST_CASE("check with and without the Specht predicate") {
    CHECK(run_cli({"check", "2,2", "-p", "2"}).out == "false\n");
    CHECK(run_cli({"check", "2,2", "-p", "2", "--specht"}).out == "true\n");
    CHECK(run_cli({"check", "17,13,9,5^2,3^3,2^4,1^4", "-p", "5"}).out == "true\n");
}

TEST_CASE("conjugate round-trips through the printed form") {
    for (const std::string text : {"7,3,2^2,1", "-", "5", "4,4,2,1"}) {
        const auto once = run_cli({"conjugate", text});
        REQUIRE(once.code == 0);
        std::string printed = once.out.substr(0, once.out.size() - 1);
        const auto twice = run_cli({"conjugate", printed});
        const specht::Partition original = specht::Partition::parse(text);
        CHECK(specht::Partition::parse(twice.out.substr(0, twice.out.size() - 1)) ==
              original);
    }
}

TEST_CASE("enumerate emits the documented JSON schema") {
    const auto result = run_cli(
        {"enumerate", "--core", "1", "-p", "3", "-w", "2", "--format", "json"});
    REQUIRE(result.code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["p"] == 3);
    CHECK(doc["core"] == nlohmann::json::array({1}));
    CHECK(doc["weight"] == 2);
    CHECK(doc["n"] == 7);
    CHECK(doc["count"] == 3);
    REQUIRE(doc["items"].is_array());
    CHECK(doc["items"].size() == 3);
    for (const auto& item : doc["items"]) {
        CHECK(item.contains("alpha"));
        CHECK(item.contains("gamma"));
        CHECK(item.contains("lambda"));
    }
    // count with identical flags equals the enumeration length.
    const auto count = run_cli({"count", "--core", "1", "-p", "3", "-w", "2"});
    CHECK(count.out == "3\n");
}

TEST_CASE("hooks renders a marked diagram") {
    const auto result = run_cli({"hooks", "7,3,2^2,1", "-p", "2", "--format", "diagram"});
    REQUIRE(result.code == 0);
    CHECK(result.out.find("11 ") != std::string::npos);
    CHECK(result.out.find("6*") != std::string::npos); // 2-divisible hook flagged
}

TEST_CASE("decompose prints the triple and split indices") {
    const auto result = run_cli({"decompose", "4,1^3", "-p", "3"});
    REQUIRE(result.code == 0);
    CHECK(result.out == "top: 3\nmid: 1\nbottom: 1^3\nsplit_row: 2\nsplit_col: 2\n");
}

TEST_CASE("glue warns on role violations but still glues") {
    const auto result =
        run_cli({"glue", "--top", "4,1", "--mid", "1", "--bottom", "-", "-p", "5"});
    CHECK(result.code == 0);
    CHECK(result.err.find("warning: top") != std::string::npos);
}

TEST_CASE("verify runs a small clean sweep") {
    const auto result = run_cli({"verify", "-p", "3", "--max-core", "2", "--max-n", "12"});
    CHECK(result.code == 0);
    CHECK(result.out.find("OK") != std::string::npos);

    const auto parallel = run_cli(
        {"verify", "-p", "3", "--max-core", "2", "--max-n", "12", "--jobs", "4"});
    CHECK(parallel.code == 0);
}

TEST_CASE("SPECHT_MAX_N caps the oracle") {
    setenv("SPECHT_MAX_N", "5", 1);
    const auto result = run_cli({"verify", "-p", "3", "--max-core", "2", "--max-n", "12"});
    unsetenv("SPECHT_MAX_N");
    CHECK(result.code == 2);
    CHECK(result.err.find("safety limit") != std::string::npos);
}

} // TEST_SUITE
