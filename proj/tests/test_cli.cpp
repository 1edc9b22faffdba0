#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oscm/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
};

fs::path workdir() {
    const auto d = fs::temp_directory_path() / "oscm_cli_test";
    fs::create_directories(d);
    return d;
}

Result run(const std::string& args) {
    const auto out = workdir() / "stdout.txt";
    const std::string cmd = std::string(OSCM_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

std::string instance_file() {
    const auto p = workdir() / "inst.json";
    oscm::io::save_instance(oscm::random_two_regular(7, 11), p);
    return p.string();
}

} // namespace

TEST(Cli, GenAndOpt) {
    const auto p = (workdir() / "gen.json").string();
    ASSERT_EQ(run("gen --n 6 --seed 4 --instance " + p).status, 0);
    const auto inst = oscm::io::load_instance(p);
    EXPECT_EQ(inst.n, 6);
    const auto r = run("opt --instance " + p);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("opt ", 0), 0u);
    EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, RunCsvAndJson) {
    const auto inst = instance_file();
    auto r = run("run --algo greedy --instance " + inst);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("seed,n,alg,source,alg_crossings,opt_crossings,ratio,violations\n", 0), 0u);
    r = run("run --algo barycenter --format json --trace --instance " + inst);
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["algorithm"], "barycenter");
    EXPECT_EQ(j["trace"]["steps"].size(), 7u);
}

TEST(Cli, RunWritesTraceAndSvg) {
    const auto inst = instance_file();
    const auto report = workdir() / "r.csv";
    const auto svg = workdir() / "r.svg";
    fs::remove(workdir() / "r.trace.json");
    ASSERT_EQ(run("run --instance " + inst + " --report " + report.string() + " --trace --svg " + svg.string()).status, 0);
    EXPECT_TRUE(fs::exists(report));
    EXPECT_TRUE(fs::exists(workdir() / "r.trace.json"));
    EXPECT_TRUE(fs::exists(svg));
    const auto a = run("audit --trace-file " + (workdir() / "r.trace.json").string());
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out.rfind("steps 7\n", 0), 0u);
}

TEST(Cli, Adversaries) {
    auto r = run("adversary --name thm1 --algo first_fit --n 8 --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["opt_crossings"], 1);
    EXPECT_EQ(run("adversary --name thm2 --rounds 2").status, 0);
    EXPECT_EQ(run("adversary --name fig8 --algo barycenter --n 6").status, 0);
    EXPECT_EQ(run("adversary --name fig8 --n 5").status, 1);
    EXPECT_NE(run("adversary --name nope").status, 0);
}

TEST(Cli, AuditStrict) {
    const auto inst = instance_file();
    const auto plain = run("audit --algo first_fit --instance " + inst);
    ASSERT_EQ(plain.status, 0);
    const bool has_findings = plain.out.find("findings 0\n") == std::string::npos;
    EXPECT_EQ(run("audit --strict --algo first_fit --instance " + inst).status, has_findings ? 3 : 0);
    EXPECT_EQ(run("audit").status, 2);
}

TEST(Cli, BenchAndRender) {
    auto r = run("bench --algo greedy --trials 6 --seed 2 --n 6 --threads 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
    r = run("bench --trials 3 --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["trials"].size(), 3u);
    r = run("render --n 4");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("<svg"), std::string::npos);
    r = run("render --no-arrows --steps 3 --instance " + instance_file());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.find("class=\"arrow\""), std::string::npos);
}

TEST(Cli, Errors) {
    EXPECT_EQ(run("run --instance /nonexistent.json").status, 1);
    EXPECT_EQ(run("run --algo median --instance " + instance_file()).status, 1);
    EXPECT_NE(run("").status, 0);
}
