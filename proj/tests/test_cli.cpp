#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// runs the installed binary through the shell, capturing stdout only
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + CLI_BINARY_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

int count_lines(const std::string& text) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("verify emits a passing json report") {
    const CliResult r = run_cli("verify r --n 100000 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("class") == "R");
    CHECK(j.at("bound").at("num") == 44);
    CHECK(j.at("bound").at("den") == 135);
    CHECK(j.at("passed") == true);
    CHECK(j.at("sampling").at("n") == 100000);
    CHECK(j.at("sampling").at("violations") == 0);

    const CliResult again = run_cli("verify r --n 100000 --format json");
    CHECK(again.exit_code == 0);
    CHECK(again.output == r.output);
}

TEST_CASE("verify writes the report to a file when asked") {
    const std::filesystem::path path = temp_file("hankel_cli_verify.json");
    std::filesystem::remove(path);
    const CliResult r =
        run_cli("verify r1 --n 100000 --format json --out \"" + path.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("class") == "R1");
    CHECK(j.at("bound").at("num") == 1);
    CHECK(j.at("bound").at("den") == 64);
    CHECK(j.at("passed") == true);
    std::filesystem::remove(path);
}

TEST_CASE("argument validation failures exit with code 2") {
    CHECK(run_cli("verify r --grid-n 8 --n 100000").exit_code == 2);
    CHECK(run_cli("verify r --n 10").exit_code == 2);
    CHECK(run_cli("verify q --n 100000").exit_code == 2);
    CHECK(run_cli("max-objective zz").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("max-objective reports the sharp branch maximum") {
    const CliResult r = run_cli("max-objective g --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("objective") == "g");
    CHECK(j.at("max_value") == 2816.0);
    CHECK(j.at("argmax").at(0) == 0.0);
    CHECK(j.at("argmax").at(1) == 1.0);
    CHECK(j.at("kind") == "vertex");
    CHECK(j.at("candidates").is_array());

    const CliResult t = run_cli("max-objective h1");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("I vertices") != std::string::npos);
    CHECK(t.output.find("II edges") != std::string::npos);
    CHECK(t.output.find("III interior") != std::string::npos);
    CHECK(t.output.find("maximum 588255.075817253") != std::string::npos);
}

TEST_CASE("hankel evaluates the determinant for literal coefficients") {
    const CliResult r = run_cli("hankel 0 0 -0.125 0 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("abs") == 0.015625);

    const CliResult sharp = run_cli(
        "hankel 0 -0.6666666666666666 0 0.9333333333333333 --format json");
    CHECK(sharp.exit_code == 0);
    const nlohmann::json js = nlohmann::json::parse(sharp.output);
    CHECK(std::abs(js.at("abs").get<double>() - 44.0 / 135.0) < 1e-15);

    const CliResult cx = run_cli("hankel 0,1 0 0 0 --format csv");
    CHECK(cx.exit_code == 0);
    CHECK(cx.output.rfind("re,im,abs\n", 0) == 0);
}

TEST_CASE("hankel rejects malformed coefficient lists") {
    CHECK(run_cli("hankel 0 0 zz 0").exit_code == 2);
    CHECK(run_cli("hankel 1 2 3").exit_code == 2);
    CHECK(run_cli("hankel 1 2 3 4 5").exit_code == 2);
    CHECK(run_cli("hankel 1 2 3 4,").exit_code == 2);
}

TEST_CASE("sample output is deterministic in the seed") {
    const CliResult a = run_cli("sample r --n 100000 --seed 7 --format json");
    const CliResult b = run_cli("sample r --n 100000 --seed 7 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK(j.at("violations") == 0);
    CHECK(j.at("envelope_violations") == 0);

    const CliResult c = run_cli("sample r --n 100000 --seed 8 --format json");
    CHECK(c.output != a.output);
}

TEST_CASE("sample csv streams one row per point plus the attainment probes") {
    const CliResult r = run_cli("sample r --n 100 --seed 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("abs_t1,abs_t2,abs_h3\n", 0) == 0);
    CHECK(count_lines(r.output) == 103);

    const CliResult u = run_cli("sample r1 --n 100 --seed 5 --mode uniform --format csv");
    CHECK(u.exit_code == 0);
    CHECK(count_lines(u.output) == 101);
}

TEST_CASE("unwritable output paths exit with code 3") {
    CHECK(run_cli("max-objective g --out /nonexistent_dir_zz/x.json").exit_code == 3);
    CHECK(run_cli("sample r --n 10 --format csv --out /nonexistent_dir_zz/x.csv").exit_code == 3);
}
