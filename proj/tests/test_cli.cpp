#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef HODGEMHD_CLI_PATH
#error "HODGEMHD_CLI_PATH must be defined by the build"
#endif

const std::string kBinary = HODGEMHD_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = kBinary + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hodgemhd_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string sub(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("verify-identities exit codes and reports") {
    TempDir tmp;
    CHECK(run("verify-identities --trials 20 --out " + tmp.sub("ok")) == 0);
    CHECK(fs::exists(tmp.path / "ok" / "verify_report.txt"));
    const std::string csvtext = slurp(tmp.path / "ok" / "verify_report.csv");
    CHECK(csvtext.rfind("# schema=hodgemhd.verify.v1", 0) == 0);
    CHECK(csvtext.find("leibniz-formula-n3") != std::string::npos);

    // vacuous run
    CHECK(run("verify-identities --trials 0 --out " + tmp.sub("vac")) == 0);

    // injected fault is detected and named
    CHECK(run("verify-identities --trials 5 --mutate contract-sign-flip --out " +
              tmp.sub("mut")) == 1);
    const std::string report = slurp(tmp.path / "mut" / "verify_report.txt");
    CHECK(report.find("FAIL") != std::string::npos);
    CHECK(report.find("counterexample") != std::string::npos);

    CHECK(run("verify-identities --mutate no-such-fixture --out " + tmp.sub("bad")) == 64);
}

TEST_CASE("simulate exit codes") {
    TempDir tmp;
    CHECK(run("simulate --preset zero --grid 8 --mesh-nodes 8 --out " + tmp.sub("zero")) == 0);
    CHECK(fs::exists(tmp.path / "zero" / "iterations.csv"));
    CHECK(fs::exists(tmp.path / "zero" / "critical_norms.csv"));
    CHECK(fs::exists(tmp.path / "zero" / "manifest.json"));
    CHECK(fs::exists(tmp.path / "zero" / "u_final.field"));

    // deliberately huge amplitude: the non-contraction path
    CHECK(run("simulate --preset mixed --grid 8 --mesh-nodes 12 --amplitude-u 80 "
              "--amplitude-b 60 --max-iter 25 --out " +
              tmp.sub("huge")) == 2);

    // config errors
    CHECK(run("simulate --grid 20 --out " + tmp.sub("badgrid")) == 64);
    CHECK(run("simulate --horizon -3 --out " + tmp.sub("badT")) == 64);
    CHECK(run("no-such-command") == 64);
}

TEST_CASE("simulate is deterministic byte for byte") {
    TempDir tmp;
    const std::string common =
        "simulate --preset mixed --grid 8 --mesh-nodes 12 --horizon 0.25 --seed 7 --out ";
    REQUIRE(run(common + tmp.sub("r1")) == 0);
    REQUIRE(run(common + tmp.sub("r2")) == 0);
    for (const char* name : {"iterations.csv", "critical_norms.csv", "constants.csv",
                             "tsearch.csv"})
        CHECK(slurp(tmp.path / "r1" / name) == slurp(tmp.path / "r2" / name));
}

TEST_CASE("config file feeds defaults and flags win") {
    TempDir tmp;
    {
        std::ofstream cfg(tmp.path / "run.cfg");
        cfg << "grid = 8\nmesh-nodes = 12\nhorizon = 0.25\npreset = mixed\n";
    }
    const std::string out1 = tmp.sub("cfg_run");
    CHECK(run("simulate --config " + (tmp.path / "run.cfg").string() + " --out " + out1) == 0);
    const std::string manifest = slurp(tmp.path / "cfg_run" / "manifest.json");
    CHECK(manifest.find("grid = 8") != std::string::npos);
    CHECK(manifest.find("preset = mixed") != std::string::npos);

    // the command line overrides the file
    const std::string out2 = tmp.sub("cfg_win");
    CHECK(run("simulate --config " + (tmp.path / "run.cfg").string() +
              " --preset zero --out " + out2) == 0);
    CHECK(slurp(tmp.path / "cfg_win" / "manifest.json").find("preset = zero") !=
          std::string::npos);
}

TEST_CASE("simulate ingests field-file initial data and dumps csv fields") {
    TempDir tmp;
    const std::string first = tmp.sub("gen");
    REQUIRE(run("simulate --preset mixed --grid 8 --mesh-nodes 10 --horizon 0.2 --out " +
                first) == 0);
    const std::string u0 = (tmp.path / "gen" / "u_final.field").string();
    const std::string b0 = (tmp.path / "gen" / "b_final.field").string();
    CHECK(run("simulate --preset zero --grid 8 --mesh-nodes 10 --horizon 0.2 --u0-file " + u0 +
              " --b0-file " + b0 + " --csv-fields --out " + tmp.sub("resume")) == 0);
    CHECK(slurp(tmp.path / "resume" / "u_final.csv").rfind("# schema=hodgemhd.field.v1", 0) ==
          0);

    // a snapshot from a different grid is rejected as a config error
    CHECK(run("simulate --preset zero --grid 16 --mesh-nodes 10 --u0-file " + u0 + " --out " +
              tmp.sub("mismatch")) == 64);
}

TEST_CASE("decay command") {
    TempDir tmp;
    CHECK(run("decay --grid 8 --t-points 6 --out " + tmp.sub("d1")) == 0);
    const std::string text = slurp(tmp.path / "d1" / "decay.csv");
    CHECK(text.rfind("# schema=hodgemhd.decay.v1", 0) == 0);
    CHECK(text.find("maxwell") != std::string::npos);

    // empty triple list: header-only CSV
    CHECK(run("decay --grid 8 --triples none --out " + tmp.sub("d2")) == 0);
    std::istringstream lines(slurp(tmp.path / "d2" / "decay.csv"));
    std::string l;
    int count = 0;
    while (std::getline(lines, l)) ++count;
    CHECK(count == 2); // schema comment + header

    // exponent relation violated
    CHECK(run("decay --grid 8 --triples 3,0.5,4 --out " + tmp.sub("d3")) == 64);
    CHECK(run("decay --grid 8 --triples 1,2 --out " + tmp.sub("d4")) == 64);
}

TEST_CASE("scaling-check command") {
    TempDir tmp;
    CHECK(run("scaling-check --preset mixed --grid 8 --mesh-nodes 10 --horizon 0.2 "
              "--lambda 2 --out " +
              tmp.sub("s1")) == 0);
    const std::string text = slurp(tmp.path / "s1" / "scaling.csv");
    CHECK(text.rfind("# schema=hodgemhd.scaling.v1", 0) == 0);
    CHECK(run("scaling-check --preset mixed --grid 8 --mesh-nodes 10 --lambda -1 --out " +
              tmp.sub("s2")) == 64);
}
