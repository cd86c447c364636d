#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + QSC_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const char* kDensity = "/tmp/qsc_clitest_rho.mat";
const char* kDensity2 = "/tmp/qsc_clitest_rho2.mat";
const char* kExample = "/tmp/qsc_clitest_example.mat";
const char* kUndecided = "/tmp/qsc_clitest_undecided.mat";

void make_fixtures() {
    static bool done = false;
    if (done) return;
    REQUIRE(run_cli(std::string("gen --kind matrix --preset density --dim 6 --seed 5 -o ") +
                    kDensity)
                .code == 0);
    REQUIRE(run_cli(std::string("gen --kind matrix --preset density --dim 4 --seed 6 -o ") +
                    kDensity2)
                .code == 0);
    REQUIRE(run_cli(std::string("gen --kind matrix --preset example -o ") + kExample).code == 0);
    // Spectrum pinned to straddle the tolerance floor: the direct positivity
    // test sees -1e-9 while the weight sums stay safely positive, so the
    // criteria disagree and the verdict must stay open.
    write_text(kUndecided,
               "dim 6\n"
               "0.6 0 0 0 0 0\n"
               "0 0.36 0 0 0 0\n"
               "0 0 0.02 0 0 0\n"
               "0 0 0 0.02 0 0\n"
               "0 0 0 0 1e-9 0\n"
               "0 0 0 0 0 -1e-9\n");
    done = true;
}

} // namespace

TEST_CASE("version flag reports the tool name and exits cleanly") {
    const Run r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "qsc 1.0.0"));
}

TEST_CASE("generated density matrix certifies with exit code 0") {
    make_fixtures();
    const Run r = run_cli(std::string("check ") + kDensity);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(matrix, dim 6)"));
    CHECK(contains(r.out, "verdict: accept"));
}

TEST_CASE("pure preset certifies as pure") {
    const Run g = run_cli("gen --kind matrix --preset pure --dim 5 --seed 9 -o "
                          "/tmp/qsc_clitest_pure.mat");
    REQUIRE(g.code == 0);
    const Run r = run_cli("check /tmp/qsc_clitest_pure.mat");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict: accept, pure"));
}

TEST_CASE("boundary example and negative preset are rejected with exit code 1") {
    make_fixtures();
    const Run ex = run_cli(std::string("check ") + kExample);
    CHECK(ex.code == 1);
    CHECK(contains(ex.out, "verdict: reject"));
    CHECK(contains(ex.out, "negative weight sum at n = 2"));

    const Run g = run_cli("gen --kind matrix --preset negative --dim 8 --seed 3 -o "
                          "/tmp/qsc_clitest_neg.mat");
    REQUIRE(g.code == 0);
    CHECK(run_cli("check /tmp/qsc_clitest_neg.mat").code == 1);
}

TEST_CASE("criteria that disagree leave the verdict open with exit code 2") {
    make_fixtures();
    const Run r = run_cli(std::string("check ") + kUndecided);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "verdict: inconclusive"));
    CHECK(contains(r.out, "conflicts:"));
    CHECK(contains(r.out, "direct-positivity vs binomial-sums"));
}

TEST_CASE("unusable inputs and flags exit with code 3") {
    make_fixtures();
    write_text("/tmp/qsc_clitest_garbage.mat", "hello world\n");
    CHECK(run_cli("check /tmp/qsc_clitest_garbage.mat").code == 3);
    CHECK(run_cli("check /tmp/qsc_clitest_missing.mat").code == 3);
    CHECK(run_cli("gen --kind matrix --preset density").code == 3);
    CHECK(run_cli(std::string("check --criteria no-such-test ") + kExample).code == 3);
    CHECK(run_cli(std::string("check --json --csv ") + kExample).code == 3);
    CHECK(run_cli(std::string("check --criteria w-purity ") + kExample).code == 3);
}

TEST_CASE("json reports are byte-identical across runs") {
    make_fixtures();
    const Run a = run_cli(std::string("check --json ") + kExample);
    const Run b = run_cli(std::string("check --json ") + kExample);
    CHECK(a.code == 1);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"tool\": \"qsc\""));
    CHECK(contains(a.out, "\"version\": \"1.0.0\""));
    CHECK(contains(a.out, "\"dim\": 3"));
    CHECK(contains(a.out, "\"verdict\": \"reject\""));
    CHECK(contains(a.out, "\"pure\": false"));

    // and through -o, which must carry the same bytes
    const Run c = run_cli(std::string("check --json -o /tmp/qsc_clitest_a.json ") + kExample);
    CHECK(c.code == 1);
    CHECK(slurp("/tmp/qsc_clitest_a.json") == a.out);
}

TEST_CASE("purity is reported as null when its criteria were not requested") {
    make_fixtures();
    const Run r = run_cli(std::string("check --criteria gates --json ") + kExample);
    CHECK(contains(r.out, "\"pure\": null"));
}

TEST_CASE("csv output starts with the documented header") {
    make_fixtures();
    const Run r = run_cli(std::string("check --csv ") + kExample);
    CHECK(r.code == 1);
    CHECK(r.out.rfind("input,kind,dim,criterion,verdict,check,value,pass\n", 0) == 0);
    CHECK(contains(r.out, ",matrix,3,binomial-sums,reject,first_negative_sum,"));
}

TEST_CASE("report aggregates the worst verdict across inputs") {
    make_fixtures();
    const Run mixed = run_cli(std::string("report ") + kDensity + " " + kExample);
    CHECK(mixed.code == 1);
    CHECK(contains(mixed.out, "qsc_clitest_rho.mat"));
    CHECK(contains(mixed.out, "qsc_clitest_example.mat"));

    CHECK(run_cli(std::string("report ") + kDensity + " " + kDensity2).code == 0);
    CHECK(run_cli(std::string("report ") + kDensity + " " + kUndecided).code == 2);
}

TEST_CASE("criteria selection narrows the run") {
    make_fixtures();
    const Run one = run_cli(std::string("check --criteria binomial-sums ") + kExample);
    CHECK(one.code == 1);
    CHECK(contains(one.out, "binomial-sums: reject"));
    CHECK_FALSE(contains(one.out, "power-limit"));

    const Run two = run_cli(std::string("check --criteria gates,direct-positivity ") + kDensity);
    CHECK(two.code == 0);
}

TEST_CASE("phase-space inputs flow through gen and check") {
    const Run g = run_cli("gen --kind wigner --preset fock --grid 64 --box 8 -o "
                          "/tmp/qsc_clitest_f0.wgf");
    REQUIRE(g.code == 0);
    const Run r = run_cli("check /tmp/qsc_clitest_f0.wgf");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(wigner, dim 64x64)"));
    CHECK(contains(r.out, "verdict: accept, pure"));

    const Run j = run_cli("check --json /tmp/qsc_clitest_f0.wgf");
    CHECK(contains(j.out, "\"dim\": ["));
}

TEST_CASE("kernel inputs flow through gen and check") {
    const Run g = run_cli("gen --kind kernel --preset mixture --weights 0.5,0.3,0.2 "
                          "--points 41 -o /tmp/qsc_clitest_mix.ker");
    REQUIRE(g.code == 0);
    const Run r = run_cli("check /tmp/qsc_clitest_mix.ker");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(kernel, dim 41)"));
    CHECK(contains(r.out, "verdict: accept, mixed"));

    const Run gx = run_cli("gen --kind kernel --preset example --points 41 -o "
                           "/tmp/qsc_clitest_exk.ker");
    REQUIRE(gx.code == 0);
    CHECK(run_cli("check /tmp/qsc_clitest_exk.ker").code == 1);
}
