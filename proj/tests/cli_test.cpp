// End-to-end checks of the installed command line: each case drives the real
// binary through a shell, captures stdout+stderr together, and inspects the
// exit code. The binary's location comes in through LFN_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr, interleaved
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string("\"") + LFN_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("cli: code and decode") {
    CliResult coded = run_cli("code '3,1,2'");
    CHECK(coded.exit_code == 0);
    CHECK(coded.output == "[2,0,0]\n");

    CliResult decoded = run_cli("decode '[2,0,0]'");
    CHECK(decoded.exit_code == 0);
    CHECK(decoded.output == "(3,1,2)\n");

    CliResult parens = run_cli("code '(3,1,2)'");
    CHECK(parens.exit_code == 0);
    CHECK(parens.output == "[2,0,0]\n");

    CliResult invalid = run_cli("code '1,2,2'");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.output.find("error: duplicate value 2") != std::string::npos);
}

TEST_CASE("cli: norm by word and by rank") {
    CliResult by_word = run_cli("norm '3,2,1'");
    CHECK(by_word.exit_code == 0);
    CHECK(by_word.output == "4\n");

    CliResult by_rank = run_cli("norm --rank 5 --degree 3");
    CHECK(by_rank.exit_code == 0);
    CHECK(by_rank.output == "4\n");

    CHECK(run_cli("norm --rank 5").exit_code == 2);            // --rank needs --degree
    CHECK(run_cli("norm '1,2,3' --rank 0 --degree 3").exit_code == 2);  // pick one form
    CHECK(run_cli("norm").exit_code == 2);
}

TEST_CASE("cli: rank and unrank") {
    CliResult ranked = run_cli("rank '3,1,2'");
    CHECK(ranked.exit_code == 0);
    CHECK(ranked.output == "4\n");

    CliResult unranked = run_cli("unrank --rank 4 --degree 3");
    CHECK(unranked.exit_code == 0);
    CHECK(unranked.output == "(3,1,2)\n");

    // The largest rank of degree 21 does not fit in 64 bits.
    std::string reversal21;
    for (int v = 21; v >= 1; --v) {
        reversal21 += std::to_string(v);
        if (v > 1) reversal21 += ',';
    }
    CliResult overflow = run_cli("rank '" + reversal21 + "'");
    CHECK(overflow.exit_code == 2);
    CHECK(overflow.output.find("error:") != std::string::npos);
}

TEST_CASE("cli: distance under both invariances") {
    CHECK(run_cli("dist '2,3,1' '3,2,1'").output == "2\n");
    CHECK(run_cli("dist '2,3,1' '3,2,1' --invariance left").output == "2\n");
    CHECK(run_cli("dist '2,3,1' '3,2,1' --invariance right").output == "1\n");
    CHECK(run_cli("dist '2,3,1' '3,2,1' --invariance sideways").exit_code == 2);
    CHECK(run_cli("dist '2,1' '1,3,2'").exit_code == 2);  // degree mismatch
}

TEST_CASE("cli: signed transposition delta") {
    CliResult up = run_cli("delta '1,3,2' 1");
    CHECK(up.exit_code == 0);
    CHECK(up.output == "+2\n");

    CliResult down = run_cli("delta '3,2,1' 2");
    CHECK(down.exit_code == 0);
    CHECK(down.output == "-1\n");

    CHECK(run_cli("delta '1,2,3' 3").exit_code == 2);  // position out of range
}

TEST_CASE("cli: distribution table") {
    CliResult small = run_cli("distribution --max 3");
    CHECK(small.exit_code == 0);
    CHECK(small.output == "m,s,d\n1,1,1\n2,1,2\n3,2,4\n");

    // All three computation methods print identical bytes.
    CliResult recursion = run_cli("distribution --max 32 --method recursion");
    CliResult definition = run_cli("distribution --max 32 --method definition");
    CliResult permutations = run_cli("distribution --max 32 --method permutations");
    CHECK(recursion.exit_code == 0);
    CHECK(recursion.output == definition.output);
    CHECK(recursion.output == permutations.output);

    CHECK(run_cli("distribution --max 0").exit_code == 2);
    CHECK(run_cli("distribution").exit_code == 2);
    CHECK(run_cli("distribution --max 257 --method permutations").exit_code == 2);
    CHECK(run_cli("distribution --max 6 --method guesswork").exit_code == 2);
}

TEST_CASE("cli: decompositions of a norm value") {
    CliResult seven = run_cli("decompositions 7");
    CHECK(seven.exit_code == 0);
    CHECK(seven.output ==
          "7=[2^2]+[2^1]+[2^0];[1,1,1,0];((2,0),(1,0),(0,0));S_2(7)\n"
          "7=[2^2]+[2^1+2^0];[1,2,0,0];((2,0),(1,1));S_2(7)\n"
          "7=[2^2+2^1]+[2^0];[2,0,1,0];((2,1),(0,0));S_2(7)\n"
          "7=[2^2+2^1+2^0];[3,0,0,0];(2,2);S_2(7)\n");

    CliResult one = run_cli("decompositions 1");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "1=[2^0];[1,0];(0,0);S_0(1)\n");

    CHECK(run_cli("decompositions 0").exit_code == 2);
    CHECK(run_cli("decompositions 513").exit_code == 2);
}

TEST_CASE("cli: verification suites") {
    CliResult norm = run_cli("verify --suite norm --scope 3");
    CHECK(norm.exit_code == 0);
    CHECK(norm.output.find("suite: norm") != std::string::npos);
    CHECK(norm.output.find("result: PASS") != std::string::npos);

    CliResult seeded = run_cli("verify --suite norm --scope 6 --seed 123");
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.output.find("seed 123") != std::string::npos);

    CliResult json_report = run_cli("verify --suite distribution --scope 8 --json");
    CHECK(json_report.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json_report.output);
    CHECK(doc.at("suite") == "distribution");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("properties").size() == 5);
    for (const auto& property : doc.at("properties")) CHECK(property.at("failed") == 0);

    CHECK(run_cli("verify --suite lemmas --scope 99").exit_code == 2);
    CHECK(run_cli("verify --suite sorcery --scope 3").exit_code == 2);
    CHECK(run_cli("verify --scope 3").exit_code == 2);
}

TEST_CASE("cli: output redirection writes identical bytes") {
    const std::string path = "cli_output_test.tmp";
    const CliResult to_stdout = run_cli("distribution --max 5");
    REQUIRE(to_stdout.exit_code == 0);

    const CliResult leading = run_cli("-o " + path + " distribution --max 5");
    CHECK(leading.exit_code == 0);
    CHECK(leading.output.empty());
    CHECK(read_file(path) == to_stdout.output);
    std::remove(path.c_str());

    const CliResult trailing = run_cli("distribution --max 5 --output " + path);
    CHECK(trailing.exit_code == 0);
    CHECK(read_file(path) == to_stdout.output);
    std::remove(path.c_str());

    CHECK(run_cli("-o /nonexistent_dir/out.csv norm '2,1'").exit_code == 2);
}

TEST_CASE("cli: top-level usage") {
    CHECK(run_cli("").exit_code == 2);              // a subcommand is required
    CHECK(run_cli("conjure").exit_code == 2);       // unknown subcommand
    CliResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("factorial norm") != std::string::npos);
    CHECK(help.output.find("decompositions") != std::string::npos);
}
