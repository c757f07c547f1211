#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "cli_runner.hpp"

using walks::testing::read_file;
using walks::testing::run_cli;

namespace {

walks::testing::CliResult cli(const std::string& args, bool merge = false, const std::string& env = "") {
    return run_cli(WALKS_CLI, args, merge, env);
}

std::string golden(const std::string& name) { return read_file(std::string(WALKS_GOLDEN_DIR) + "/" + name); }

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "walks_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("count") {
    auto r = cli("count --type ae --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "42\n");
    CHECK(cli("count --type ee --n 5").out == "1024\n");
    CHECK(cli("count --type ace --n 3 --method formula").out == "44\n");
    CHECK(cli("count --type ea --n 4 --method brute").out == "42\n");
    CHECK(cli("count --type ee --n 40").out == "1208925819614629174706176\n");

    r = cli("count --type ae --n 12 --method brute --max-brute 1000", true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("refused") != std::string::npos);

    CHECK(cli("count --type ax --n 3").exit_code == 1);
    CHECK(cli("count --type ae --n -1").exit_code == 1);
    CHECK(cli("count --type ae").exit_code == 1);
    CHECK(cli("count --type ae --n 4 --method magic").exit_code == 1);
}

TEST_CASE("memo ceiling from the environment") {
    auto r = cli("count --type aa --n 20", true, "WALKS_MAX_STATES=5");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("WALKS_MAX_STATES") != std::string::npos);
    CHECK(cli("count --type aa --n 4", false, "WALKS_MAX_STATES=1000").out == "10\n");
    CHECK(cli("count --type aa --n 4", false, "WALKS_MAX_STATES=abc").exit_code == 1);
    CHECK(cli("count --type aa --n 4", false, "WALKS_MAX_STATES=0").exit_code == 1);
}

TEST_CASE("sequence") {
    CHECK(cli("sequence --type add --max-n 4").out == "1\n2\n5\n14\n42\n");
    CHECK(cli("sequence --type ae --max-n 0 --format bfile").out == "0 1\n");
    CHECK(cli("sequence --type bbb --max-n 4").out == "1\n0\n6\n0\n90\n");
    CHECK(cli("sequence --type ae --max-n 1 --format json").out ==
          "{\"type\":\"ae\",\"n\":0,\"count\":\"1\"}\n{\"type\":\"ae\",\"n\":1,\"count\":\"2\"}\n");

    const auto bfile = cli("sequence --type ee --max-n 40 --format bfile").out;
    const std::regex line_re("^[0-9]+ [0-9]+$");
    std::istringstream in(bfile);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        REQUIRE(std::regex_match(line, line_re));
    }
    CHECK(lines == 41);
    CHECK(cli("sequence --type add --max-n 12 --format bfile").out == golden("add.bfile"));
}

TEST_CASE("enumerate") {
    CHECK(cli("enumerate --type ae --n 1").out == "E\nW\n");
    const auto four = cli("enumerate --type ae --n 4").out;
    CHECK(std::count(four.begin(), four.end(), '\n') == 42);
    CHECK(four.rfind("EEEE\n", 0) == 0);
    CHECK(cli("enumerate --type ae --n 0").out == "\n");
}

TEST_CASE("validate") {
    auto r = cli("validate --type ae NEWWNNEESENNSSSSEE");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "valid\n");
    CHECK(cli("validate --type ae ''").out == "valid\n");
    CHECK(cli("validate --type ae").out == "valid\n");

    r = cli("validate --type ae SEWN");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "invalid at step 0: height below zero in dimension 0\nSEWN\n^\n");
    r = cli("validate --type ae ESNW");
    CHECK(r.out == "invalid at step 1: height below zero in dimension 0\nESNW\n ^\n");
    r = cli("validate --type ae NN");
    CHECK(r.out == "invalid at step 2: nonzero final height in dimension 0\nNN\n  ^\n");

    r = cli("validate --type ae NXS", true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("offset 1") != std::string::npos);
}

TEST_CASE("dyck") {
    CHECK(cli("dyck decode NNSS").out == "E\n");
    CHECK(cli("dyck encode E").out == "NNSS\n");
    CHECK(cli("dyck encode NEWWNNEESENNSSSSEE").out == "NNNNSSNSNNNNNNSNSSSNSNNNNSSSSSSSSNSNSS\n");
    CHECK(cli("dyck decode NNNNSSNSNNNNNNSNSSSNSNNNNSSSSSSSSNSNSS").out == "NEWWNNEESENNSSSSEE\n");
    auto r = cli("dyck decode SN", true);
    CHECK(r.exit_code == 1);
    r = cli("dyck encode S", true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("step 0") != std::string::npos);
    CHECK(cli("dyck sideways NS").exit_code == 1);
}

TEST_CASE("verify") {
    auto r = cli("verify --type ae --n-max 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ae 10 58786 58786 58786 - agree") != std::string::npos);
    CHECK(r.out.find("all agree") != std::string::npos);

    r = cli("verify --type ac --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("NOTE ac: published closed form binom(2n+1,n)") != std::string::npos);

    r = cli("verify --type add --n-max 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("add 8 4862 4862 4862 4862 agree") != std::string::npos);

    // The published bdd and bde rows carry each other's terms, so the golden
    // comparison fails for exactly those two rows.
    r = cli("verify --table3 --n-max 7");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("checked 25 types") != std::string::npos);
    std::set<std::string> mismatched;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("MISMATCH ", 0) == 0) {
            mismatched.insert(line.substr(9, 3));
        }
    }
    CHECK(mismatched == std::set<std::string>{"bdd", "bde"});
    CHECK(r.out.find("NOTE bdd: printed terms for bdd (n = 0..7) equal the computed counts of type bde") !=
          std::string::npos);
    CHECK(r.out.find("NOTE bde: printed terms for bde (n = 0..7) equal the computed counts of type bdd") !=
          std::string::npos);

    r = cli("verify --type aa --n-max 6", false, "WALKS_MAX_STATES=3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("WARN aa:") != std::string::npos);
    CHECK(cli("verify --n-max 3").exit_code == 1);
}

TEST_CASE("render") {
    const auto out = scratch("figure.svg");
    auto r = cli("render --type ae NEWWNNEESENNSSSSEE --format svg --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(read_file(out.string()) == golden("figure_walk.svg"));

    CHECK(cli("render --type ae '' --format svg").out == golden("empty_walk.svg"));
    CHECK(cli("render --dyck NNSS --format svg").out == golden("nnss_dyck.svg"));
    CHECK(cli("render --dyck NNSS").out == " /\\\n/  \\\n____\nlength 4 peak 2\n");

    const auto ascii = cli("render --type ae NEWWNNEESENNSSSSEE").out;
    CHECK(ascii == golden("figure_walk.txt"));
    CHECK(ascii.find("end (4,0)") != std::string::npos);

    CHECK(cli("render --type ace N --format svg").exit_code == 1);
    CHECK(cli("render --type ae S").exit_code == 1);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const std::string args :
         {"sequence --type ace --max-n 10 --format json", "verify --table3 --n-max 6",
          "render --type ae NEWWNNEESENNSSSSEE --format svg", "enumerate --type abc --n 4"}) {
        const auto first = cli(args);
        const auto second = cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}
