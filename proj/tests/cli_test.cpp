// Drives the installed CLI binary end to end. The binary path arrives as
// argv[1] from CTest.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = env + (env.empty() ? "" : " ") + g_binary + " " + args + " > " +
                            out_path + " 2> cli_test_stderr.tmp";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (const char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("verify: binary3 example passes with the published parameters") {
    const RunResult r = run("verify --family binary3 -p 2 -m 2 --s2 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("nkd: 15,6,6") != std::string::npos);
    CHECK(r.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify: binary4 m=3 matches Example 3 in json format") {
    const RunResult r =
        run("verify --family binary4 -p 2 -m 3 --k 1 --t 5 --format json --method both");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(r.output);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["closed"]["nkd"] == nlohmann::ordered_json({63, 12, 24}));
    CHECK(parsed["enumerated"]["values_direct"] ==
          parsed["enumerated"]["values_niho"]);
}

TEST_CASE("verify: invalid parameters exit 2") {
    CHECK(run("verify --family pary4 -p 3 -m 2 --t 10").exit_code == 2);
    CHECK(run("verify --family binary3 -p 2 -m 2 --s2 3").exit_code == 2);
    CHECK(run("verify --family binary3 -p 4 -m 2 --s2 1").exit_code == 2);
    CHECK(run("verify --family binary3 -p 2 -m 2").exit_code == 2);  // missing --s2
    CHECK(run("verify --family nope -p 2 -m 2").exit_code == 2);
    CHECK(run("wat").exit_code == 2);
}

TEST_CASE("verify: q cap honors NIHO_MAX_Q") {
    CHECK(run("verify --family pary4 -p 3 -m 2 --t 2", "NIHO_MAX_Q=50").exit_code == 2);
    CHECK(run("verify --family pary4 -p 3 -m 2 --t 2", "NIHO_MAX_Q=100").exit_code == 0);
}

TEST_CASE("verify: custom modulus is honored and echoed") {
    const RunResult r =
        run("verify --family binary3 -p 2 -m 2 --s2 1 --modulus 1,0,0,1,1 --format json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(r.output);
    CHECK(parsed["field"]["modulus"] == nlohmann::ordered_json({1, 0, 0, 1, 1}));
    // a non-primitive modulus is invalid
    CHECK(run("verify --family binary3 -p 2 -m 2 --s2 1 --modulus 1,1,1,1,1").exit_code == 2);
}

TEST_CASE("verify: --out writes a file; bad paths exit 3") {
    const RunResult r = run(
        "verify --family binary3 -p 2 -m 2 --s2 1 --format csv --out cli_test_report.csv");
    CHECK(r.exit_code == 0);
    std::ifstream in("cli_test_report.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "kind,value_or_weight,frequency,source");
    CHECK(run("verify --family binary3 -p 2 -m 2 --s2 1 --out no/such/dir/x.txt").exit_code ==
          3);
    std::remove("cli_test_report.csv");
}

TEST_CASE("sweep: binary3 m=2 summary") {
    const RunResult r = run("sweep --family binary3 -p 2 -m 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("parameters=2 classes=2 distributions=1") != std::string::npos);
}

TEST_CASE("sweep: binary4 m=3 classes in json") {
    const RunResult r = run("sweep --family binary4 -p 2 -m 3 --format json --method niho");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(r.output);
    REQUIRE(parsed["classes"].size() == 3);
    CHECK(parsed["classes"][0]["params"] == "k=1,t=1");
    CHECK(parsed["classes"][1]["params"] == "k=1,t=5");
    CHECK(parsed["classes"][2]["params"] == "k=1,t=7");
    CHECK(parsed["pass"] == true);
}

TEST_CASE("sweep: binary3 m=3 distribution classes") {
    const RunResult r = run("sweep --family binary3 -p 2 -m 3 --method niho");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("parameters=4 classes=4 distributions=2") != std::string::npos);
}

TEST_CASE("sweep: empty parameter range reports no valid parameters") {
    const RunResult r = run("sweep --family binary4 -p 2 -m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no valid parameters") != std::string::npos);
}

TEST_CASE("dump field-tables: 16-line exp and log tables for GF(16)") {
    const RunResult r = run("dump field-tables -p 2 -m 2");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::size_t exp_lines = 0, log_lines = 0;
    int section = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# exp", 0) == 0) {
            section = 1;
            continue;
        }
        if (line.rfind("# log", 0) == 0) {
            section = 2;
            continue;
        }
        if (section == 1) ++exp_lines;
        if (section == 2) ++log_lines;
    }
    CHECK(exp_lines == 16);
    CHECK(log_lines == 16);
}

TEST_CASE("dump codewords: 2^(3m) lines for binary3 m=2") {
    const RunResult r = run("dump codewords --family binary3 -p 2 -m 2 --s2 1");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 64);
    // every line: a=<log|0> b=<log|0> <15 binary digits>
    std::istringstream in(r.output);
    std::string line;
    while (std::getline(in, line)) {
        CHECK(line.rfind("a=", 0) == 0);
        const std::size_t space = line.rfind(' ');
        CHECK(line.size() - space - 1 == 15);
    }
}

TEST_CASE("dump value-histogram: five rows for pary4 p=5 m=2 t=2") {
    const RunResult r = run("dump value-histogram --family pary4 -p 5 -m 2 --t 2 --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 5);
    std::istringstream in(r.output);
    std::string first;
    std::getline(in, first);
    CHECK(first == "625,1");  // trivial value p^(2m), frequency 1
}

TEST_CASE("dump without a family exits 2") {
    CHECK(run("dump codewords -p 2 -m 2").exit_code == 2);
    CHECK(run("dump nonsense -p 2 -m 2").exit_code == 2);
}

TEST_CASE("stdout is stable across runs for identical args") {
    const RunResult a = run("verify --family binary3 -p 2 -m 2 --s2 1 --format csv");
    const RunResult b = run("verify --family binary3 -p 2 -m 2 --s2 1 --format csv");
    CHECK(a.output == b.output);
    const RunResult c = run("dump codewords --family binary3 -p 2 -m 2 --s2 1");
    const RunResult d = run("dump codewords --family binary3 -p 2 -m 2 --s2 1");
    CHECK(c.output == d.output);
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
