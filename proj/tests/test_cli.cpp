#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <codeloop/codeloop.hpp>

#include "oracles.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "/tmp/codeloop_cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd =
        std::string(CODELOOP_CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = slurp(out_path);
    std::remove(out_path.c_str());
    return result;
}

} // namespace

TEST_CASE("verify accepts the shipped samples") {
    const RunResult rep = run_cli("verify " + oracles::data_path("rep4.txt"));
    CHECK(rep.exit_code == 0);
    CHECK(rep.output.find("VERDICT CONSISTENT") != std::string::npos);
    CHECK(rep.output.find("code: length=4 dim=1 codewords=2") != std::string::npos);

    const RunResult ham = run_cli("verify " + oracles::data_path("hamming8.txt"));
    CHECK(ham.exit_code == 0);
    CHECK(ham.output.find("NONASSOC witness=(1,2,4)") != std::string::npos);
    CHECK(ham.output.find("NOTE D:") != std::string::npos);
    CHECK(ham.output.find("nullity=11") != std::string::npos);
}

TEST_CASE("verify output is byte identical across runs") {
    const std::string args = "verify " + oracles::data_path("hamming8.txt");
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("verify rejects a code that is not doubly even") {
    const RunResult r = run_cli("verify " + oracles::data_path("not_doubly_even.txt"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("DOUBLY_EVEN FAILS witness=1100 weight=2") != std::string::npos);
    CHECK(r.output.find("VERDICT INCONSISTENT") != std::string::npos);
}

TEST_CASE("verify reports IO problems with exit three") {
    CHECK(run_cli("verify /tmp/definitely_missing_codeloop_input.txt").exit_code == 3);
}

TEST_CASE("usage errors exit with three and help with zero") {
    CHECK(run_cli("").exit_code == 3);
    CHECK(run_cli("frobnicate").exit_code == 3);
    CHECK(run_cli("verify").exit_code == 3);            // missing argument
    CHECK(run_cli("export x --what bogus -o /tmp/x").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("export writes the solved table and the cayley table") {
    const std::string phi_path = "/tmp/codeloop_test_phi.txt";
    const RunResult phi =
        run_cli("export " + oracles::data_path("rep4.txt") + " --what phi -o " + phi_path);
    REQUIRE(phi.exit_code == 0);
    CHECK(slurp(phi_path) == "k=1\n00\n01\n");
    std::remove(phi_path.c_str());

    const std::string cay_path = "/tmp/codeloop_test_cayley.txt";
    const RunResult cay =
        run_cli("export " + oracles::data_path("rep4.txt") + " --what table -o " + cay_path);
    REQUIRE(cay.exit_code == 0);
    CHECK(slurp(cay_path) == "order=4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    std::remove(cay_path.c_str());
}

TEST_CASE("export rejects bad targets and bad inputs") {
    const RunResult unwritable = run_cli("export " + oracles::data_path("rep4.txt") +
                                         " --what phi -o /no_such_dir/phi.txt");
    CHECK(unwritable.exit_code == 3);
    const RunResult bad = run_cli("export " + oracles::data_path("not_doubly_even.txt") +
                                  " --what phi -o /tmp/codeloop_never_written.txt");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("fuzz runs deterministically") {
    const RunResult a = run_cli("fuzz --dim 2 --len 8 --count 25 --seed 5");
    const RunResult b = run_cli("fuzz --dim 2 --len 8 --count 25 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("mismatches=0") != std::string::npos);
    CHECK(run_cli("fuzz --dim 9 --count 1").exit_code == 2);
}
