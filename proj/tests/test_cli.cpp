#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(CTVERIFY_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "ctverify_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("verify reports holds and violations through the exit code", "[cli]") {
    const auto ok = cli("verify --scenario case2 --ct stability");
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "holds=true"));
    CHECK(has(ok.out, "collision=false"));

    const auto bad = cli("verify --scenario case3 --ct stability");
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "holds=false"));
    CHECK(has(bad.out, "collision=true"));
}

TEST_CASE("simulate then check a trace file", "[cli]") {
    const fs::path csv = scratch() / "case1.csv";
    const auto sim = cli("simulate --scenario case1 --out " + csv.string());
    REQUIRE(sim.code == 0);
    CHECK(slurp(csv).starts_with("t,x_ego,v_ego,a_ego,x_lead,v_lead,d_rel,d_safe,mode\n"));

    const auto named = cli("check --trace " + csv.string() + " --ct stability");
    CHECK(named.code == 0);
    CHECK(has(named.out, "holds=true"));

    const auto custom = cli("check --trace " + csv.string() +
                            " --formula \"G far\" --atom \"far = d_rel > 1000\"");
    CHECK(custom.code == 1);
    CHECK(has(custom.out, "counterexample_index=0"));

    const fs::path claim = scratch() / "claim.pml";
    const auto exported = cli("check --trace " + csv.string() +
                              " --formula \"G near\" --atom \"near = d_rel > 0\" --never-claim " +
                              claim.string());
    CHECK(exported.code == 0);
    CHECK(slurp(claim).starts_with("never"));
}

TEST_CASE("simulate is byte-reproducible", "[cli]") {
    const fs::path a = scratch() / "fig1_a.csv", b = scratch() / "fig1_b.csv";
    REQUIRE(cli("simulate --scenario fig1_sine --out " + a.string()).code == 0);
    REQUIRE(cli("simulate --scenario fig1_sine --out " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("report, catalog and plot", "[cli]") {
    const auto rep = cli("report");
    CHECK(rep.code == 0);
    CHECK(has(rep.out, "3/3 verdicts match"));

    const auto cat = cli("catalog list");
    CHECK(cat.code == 0);
    CHECK(has(cat.out, "G P"));

    const fs::path csv = scratch() / "case2.csv", svg = scratch() / "case2.svg";
    REQUIRE(cli("simulate --scenario case2 --out " + csv.string()).code == 0);
    REQUIRE(cli("plot --trace " + csv.string() + " --out " + svg.string()).code == 0);
    CHECK(slurp(svg).starts_with("<svg"));
}

TEST_CASE("usage and input errors exit with 2", "[cli]") {
    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("verify --scenario case2").code == 2);
    CHECK(cli("verify --scenario nosuchcase --ct stability").code == 2);
    const auto parse = cli("verify --scenario case2 --formula \"G (p\" --atom \"p = d_rel > 0\"");
    CHECK(parse.code == 2);
    CHECK(has(parse.out, "expected"));
    CHECK(cli("verify --scenario case2 --formula \"G q\" --atom \"p = d_rel > 0\"").code == 2);
}
