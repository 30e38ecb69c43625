#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string tag = std::to_string(counter++);
    std::string out_path = "cli_out_" + tag + ".txt";
    std::string err_path = "cli_err_" + tag + ".txt";
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(rc);
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

}  // namespace

TEST_CASE("tables for genus 2") {
    RunResult res = run_cli("tables -g 2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("2,8,3,6,2.44845,1.2486,16,8,4") != std::string::npos);
    CHECK(res.out.find("2,10,3,3,3.23384,0.945359,10,8,2") != std::string::npos);
    CHECK(res.out.find("2,12,3,2,") != std::string::npos);  // no code columns
    CHECK(res.out.find("2,18,3,1,") != std::string::npos);

    RunResult again = run_cli("tables -g 2 --format csv");
    CHECK(res.out == again.out);  // byte-identical reruns
}

TEST_CASE("tables genus 7 code rows") {
    RunResult res = run_cli("tables -g 7 --format csv");
    CHECK(res.exit_code == 0);
    for (const char* frag :
         {",8,3,36,", ",10,3,18,", ",12,3,12,", ",14,3,9,", ",18,3,6,", ",30,3,3,"}) {
        CHECK_MESSAGE(res.out.find(frag) != std::string::npos, frag);
    }
    // n_f = 4 row exists but carries no code.
    CHECK(res.out.find("7,24,3,4,") != std::string::npos);
    CHECK(res.out.find(",96,28,6") != std::string::npos);
    CHECK(res.out.find(",30,28,2") != std::string::npos);
}

TEST_CASE("tables compare against the bundled reference") {
    RunResult res = run_cli("tables -g 2 --compare --format md");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("12/12 cells match") != std::string::npos);

    RunResult g3 = run_cli("tables -g 3 --compare --format md");
    CHECK(g3.exit_code == 0);  // the two transposed ratio cells are flagged, not fatal
    CHECK(g3.out.find("transcription defect") != std::string::npos);
    CHECK(g3.out.find("17/19 cells match") != std::string::npos);

    for (int g = 4; g <= 9; ++g) {
        RunResult r = run_cli("tables -g " + std::to_string(g) + " --compare --format md");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("build writes its artifacts") {
    std::filesystem::create_directories("cli_build");
    RunResult res = run_cli("build -p 10 -g 2 -o cli_build/deca");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[[10,8,2-estimate]]") != std::string::npos);
    CHECK(std::filesystem::exists("cli_build/deca.complex.json"));
    CHECK(std::filesystem::exists("cli_build/deca.alist"));
    CHECK(std::filesystem::exists("cli_build/deca.report.json"));
    std::string alist = slurp("cli_build/deca.alist");
    CHECK(alist.rfind("10 3\n3 10\n", 0) == 0);
    std::string report = slurp("cli_build/deca.report.json");
    CHECK(report.find("\"k\": 8") != std::string::npos);
    std::filesystem::remove_all("cli_build");
}

TEST_CASE("build draws the genus-2 octagon picture") {
    std::filesystem::create_directories("cli_svg");
    RunResult res = run_cli("build -p 8 -g 2 --svg cli_svg/out.svg -o cli_svg/bolza");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("via geometric") != std::string::npos);
    std::string svg = slurp("cli_svg/out.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("#f2c230") != std::string::npos);  // a nontrivial string is highlighted
    std::filesystem::remove_all("cli_svg");
}

TEST_CASE("build failures use exit code 2 with the documented reasons") {
    RunResult p18 = run_cli("build -p 18 -g 2");
    CHECK(p18.exit_code == 2);
    CHECK(p18.err.find("fewer than 3 faces") != std::string::npos);
    CHECK(p18.out.find("error") != std::string::npos);  // machine-readable mirror

    RunResult p7 = run_cli("build -p 7 -g 2");
    CHECK(p7.exit_code == 2);
    CHECK(p7.err.find("not 3-colorable") != std::string::npos);

    RunResult p11 = run_cli("build -p 11 -g 2");
    CHECK(p11.exit_code == 2);
    CHECK(p11.err.find("incompatible (p,g)") != std::string::npos);

    RunResult forced = run_cli("build -p 10 -g 2 --builder geometric");
    CHECK(forced.exit_code == 2);
    CHECK(forced.err.find("pairing-incompatible") != std::string::npos);
}

TEST_CASE("family command") {
    RunResult res = run_cli("family --gmax 6");
    CHECK(res.exit_code == 0);
    for (const char* frag : {"16    8", "20    12", "24    16", "28    20", "32    24"})
        CHECK_MESSAGE(res.out.find(frag) != std::string::npos, frag);
}

TEST_CASE("verify command exit codes") {
    RunResult ok = run_cli("verify -p 10 -g 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("saturated") != std::string::npos);
    CHECK(ok.out.find("AGREE") != std::string::npos);

    RunResult bolza = run_cli("verify -p 8 -g 2");
    CHECK(bolza.exit_code == 0);
    CHECK(bolza.out.find("DIFFER") != std::string::npos);  // estimate 4, found 2

    // A tiny budget cannot finish the n = 96 search: upper bound, and
    // --strict maps that to exit code 4.
    RunResult strict = run_cli("verify -p 8 -g 7 --budget 0.001s --strict --builder combinatorial");
    CHECK(strict.exit_code == 4);
    CHECK(strict.out.find("upper-bound") != std::string::npos);
}
