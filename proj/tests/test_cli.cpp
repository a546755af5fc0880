#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "choicelab/report_json.hpp"
#include "test_util.hpp"

using namespace choicelab;
using namespace testutil;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* path = std::getenv("CHOICELAB_CLI");
    REQUIRE(path != nullptr);
    return path;
}

CliResult run_cli(const std::string& args) {
    std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

const std::string kE1 = "ground: x y z\nx y z -> x\nx y -> y\nx z -> z\ny z -> y\n";

}  // namespace

TEST_CASE("classify exits 0 and reports verdicts as data") {
    auto file = write_temp("cli_e1.cf", kE1);
    CliResult r = run_cli("classify " + file.string() + " --json");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.out);
    CHECK(report["models"]["CMLA"]["holds"] == true);
    CHECK(report["models"]["ALPHA"]["holds"] == false);
    CHECK(report["models"]["CSLA"]["holds"] == false);
    CHECK(report["models"]["CMLA"]["certificate"]["preference"] == Json::array({"x", "y", "z"}));
}

TEST_CASE("invalid datasets exit 3 with the offending menu") {
    auto file = write_temp("cli_missing.cf", "ground: x y z\nx y -> x\ny z -> y\nx y z -> x\n");
    CliResult r = run_cli("classify " + file.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("bound violations exit 4") {
    CliResult r = run_cli("census --n 7");
    CHECK(r.exit_code == 4);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("classify").exit_code == 2);
    auto file = write_temp("cli_e1.cf", kE1);
    CHECK(run_cli("classify " + file.string() + " --no-such-flag").exit_code == 2);
    CHECK(run_cli("relations " + file.string() + " --which P,NOPE").exit_code == 2);
    CHECK(run_cli("elicit " + file.string() + " --model NOPE").exit_code == 2);
}

TEST_CASE("switches prints the documented line format") {
    auto file = write_temp("cli_e1.cf", kE1);
    CliResult r = run_cli("switches " + file.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "(x z , x y z) removed=y  c(A)=x c(A\\x)=z\n"
          "(x y , x y z) removed=z  c(A)=x c(A\\x)=y\n");
}

TEST_CASE("elicit JSON round-trips into a verifying explanation") {
    auto file = write_temp("cli_e1.cf", kE1);
    for (const std::string model : {"CMLA", "CLA", "MBR", "MAOR", "CAPACITY_SL(2)"}) {
        CliResult r = run_cli("elicit " + file.string() + " --model '" + model + "' --json");
        REQUIRE(r.exit_code == 0);
        Json j = Json::parse(r.out);
        if (model == "MAOR") {
            CHECK(j["in_model"] == false);  // E1 is not minimally attentive
            continue;
        }
        REQUIRE(j["in_model"] == true);
        ChoiceFunction c = e1();
        Explanation e = explanation_from_json(c.ground_ptr(), j);
        CHECK(verify_explanation(c, e).holds);
    }
}

TEST_CASE("elicit reports non-membership as data, not an error") {
    auto file = write_temp("cli_e1.cf", kE1);
    CliResult r = run_cli("elicit " + file.string() + " --model CSLA --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["in_model"] == false);
}

TEST_CASE("identical invocations produce byte-identical output") {
    auto file = write_temp("cli_e2.cf",
                           "ground: x y z\nx y z -> x\nx y -> y\nx z -> x\ny z -> y\n");
    const std::vector<std::string> commands = {
        "classify " + file.string(),
        "classify " + file.string() + " --json",
        "switches " + file.string(),
        "relations " + file.string(),
        "elicit " + file.string() + " --model CSLA --json",
        "census --n 3 --json",
        "verify --n 3 --suite census-counts --json",
    };
    for (const std::string& args : commands) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("census respects explicit model lists and sampling flags") {
    CliResult r = run_cli("census --n 3 --models ALPHA --json");
    REQUIRE(r.exit_code == 0);
    Json rows = Json::parse(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["model"] == "ALPHA");
    CHECK(rows[0]["count"] == 6);
    CHECK(rows[0]["examined"] == 24);

    CliResult comma = run_cli("census --n 3 --models ALPHA,CMLA --json");
    REQUIRE(comma.exit_code == 0);
    Json crows = Json::parse(comma.out);
    REQUIRE(crows.size() == 2);
    CHECK(crows[1]["model"] == "CMLA");
    CHECK(run_cli("census --n 3 --models ALPHA,NOPE").exit_code == 2);

    CliResult sampled = run_cli("census --n 5 --models ALPHA --sample 200 --seed 9 --json");
    REQUIRE(sampled.exit_code == 0);
    Json srows = Json::parse(sampled.out);
    CHECK(srows[0]["examined"] == 200);
}

TEST_CASE("verify prints one line per suite") {
    CliResult r = run_cli("verify --n 3 --suite alpha-triple");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("PASS alpha-triple", 0) == 0);
}
