#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "apoly/cli.hpp"
#include "apoly/render.hpp"

using namespace apoly;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("apoly");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(APOLY_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("compute text goldens") {
    CHECK(run({"compute", "-n", "1"}) .out == golden("text_n1.txt"));
    CHECK(run({"compute", "-n", "0"}).out == golden("text_n0.txt"));
    CHECK(run({"compute", "-n", "-1"}).out == golden("text_n-1.txt"));
    CHECK(run({"compute", "-n", "1"}).exit_code == 0);
    CHECK(run({"compute", "-n", "1"}).err.empty());
}

TEST_CASE("compute latex goldens") {
    CHECK(run({"compute", "-n", "1", "--format", "latex"}).out == golden("latex_n1.txt"));
    CHECK(run({"compute", "-n", "0", "--format", "latex"}).out == golden("latex_n0.txt"));
    CHECK(run({"compute", "-n", "-1", "--format", "latex"}).out == golden("latex_n-1.txt"));
}

TEST_CASE("compute json goldens and byte-identical round-trip") {
    for (const char* n : {"1", "0", "-1"}) {
        CAPTURE(n);
        CliResult r = run({"compute", "-n", n, "--format", "json"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(std::string("json_n") + n + ".txt"));

        // Parse and re-serialize: byte-identical modulo the trailing newline.
        ordered_json parsed = ordered_json::parse(r.out);
        CHECK(parsed.dump() + "\n" == r.out);

        // The term list denotes the same polynomial the text format shows.
        LaurentPoly p = poly_from_terms_json(parsed.at("polynomial"));
        CliResult text = run({"compute", "-n", n});
        CHECK(text.out.find(to_text(p)) != std::string::npos);
    }
}

TEST_CASE("renderings stay stable across runs") {
    for (const char* fmt : {"text", "latex", "json"}) {
        for (const char* n : {"-1", "0", "1"}) {
            CAPTURE(fmt);
            CAPTURE(n);
            CliResult a = run({"compute", "-n", n, "--format", fmt});
            CliResult b = run({"compute", "-n", n, "--format", fmt});
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("compute single methods") {
    const std::string expected = golden("text_n-1.txt");
    for (const char* method : {"explicit", "substitution", "resultant"}) {
        CAPTURE(method);
        CliResult r = run({"compute", "-n", "-1", "--method", method});
        CHECK(r.exit_code == 0);
        CHECK(r.out == expected);
    }
}

TEST_CASE("verify command") {
    CliResult ok = run({"verify", "--range", "-2..2"});
    CHECK(ok.exit_code == 0);
    CHECK(count_lines(ok.out) == 5);
    CHECK(ok.out.find("n=-2 agree") != std::string::npos);
    CHECK(ok.out.find("DISAGREE") == std::string::npos);

    CliResult json = run({"verify", "--range", "3..3", "--format", "json"});
    CHECK(json.exit_code == 0);
    ordered_json record = ordered_json::parse(json.out);
    CHECK(record.at("n") == 3);
    CHECK(record.at("agree") == true);
    CHECK(record.at("elapsed_ms").size() == 3);

    CliResult corrupted = run({"verify", "--range", "2..2", "--corrupt", "resultant"});
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.out.find("DISAGREE") != std::string::npos);

    // Corrupting any single method must trip the gate.
    for (const char* method : {"explicit", "substitution"}) {
        CAPTURE(method);
        CHECK(run({"verify", "--range", "1..1", "--corrupt", method}).exit_code == 1);
    }
}

TEST_CASE("table command") {
    CliResult latex = run({"table", "--range", "-1..1", "--format", "latex"});
    CHECK(latex.exit_code == 0);
    CHECK(count_lines(latex.out) == 7);  // begin + header + hline + 3 rows + end
    CHECK(latex.out.find("$1$ & $L + M^{6}$ \\\\") != std::string::npos);

    CliResult csv = run({"table", "--range", "0..0", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,polynomial\n0,\"[{\"\"coeff\"\":\"\"1\"\",\"\"e_L\"\":0,\"\"e_M\"\":0}]\"\n");

    CliResult empty = run({"table", "--range", "2..1", "--format", "csv"});
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "n,polynomial\n");

    CliResult empty_latex = run({"table", "--range", "2..1", "--format", "latex"});
    CHECK(empty_latex.exit_code == 0);
    CHECK(count_lines(empty_latex.out) == 4);  // header only
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "--range", "x..y"}).exit_code == 2);
    CHECK(run({"verify", "--range", "1.."}).exit_code == 2);
    CHECK(run({"verify", "--range", "5"}).exit_code == 2);
    CHECK(run({"compute"}).exit_code == 2);                       // missing -n
    CHECK(run({"compute", "-n", "abc"}).exit_code == 2);          // not an integer
    CHECK(run({"compute", "-n", "1", "--method", "magic"}).exit_code == 2);
    CHECK(run({"table", "--range", "0..1"}).exit_code == 2);      // missing format
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);

    CliResult bad = run({"verify", "--range", "x..y"});
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}

TEST_CASE("spawned binary behaves like the in-process CLI") {
    std::string command = std::string(APOLY_CLI_BIN) + " compute -n 1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 256> buffer{};
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
    int status = pclose(pipe);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output == golden("text_n1.txt"));
}
