#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <string>

#include "arcs/json_io.hpp"

// Drives the installed binary end to end; ARCS_CLI_PATH is injected by
// the build.

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    CmdResult r;
    std::string cmd = std::string(ARCS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("arcs_cli_test_" + name);
}

}  // namespace

TEST_CASE("generate emits a verified document") {
    CmdResult r = run("generate --k 11 --format json");
    CHECK(r.status == 0);
    arcs::ArcsSystem sys = arcs::system_from_json(r.out);
    CHECK(sys.k == 11);
    CHECK(sys.almost_parallel_classes.size() == 22);
}

TEST_CASE("generate rejects unsupported orders") {
    CmdResult even = run("generate --k 12");
    CHECK(even.status == 2);
    CHECK(even.out.find("odd") != std::string::npos);

    CmdResult small = run("generate --k 9");
    CHECK(small.status == 2);
    CHECK(small.out.find("supported orders") != std::string::npos);
}

TEST_CASE("generate --out writes a file and text format prints a listing") {
    auto path = temp_file("k13.json");
    CmdResult r = run("generate --k 13 --out " + path.string());
    CHECK(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(arcs::system_from_json(body).k == 13);

    CmdResult t = run("generate --k 11 --format text");
    CHECK(t.status == 0);
    CHECK(t.out.find("k-ARCS(45)") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("verify round-trips generate output") {
    auto path = temp_file("k15.json");
    REQUIRE(run("generate --k 15 --out " + path.string()).status == 0);
    CmdResult ok = run("verify --input " + path.string());
    CHECK(ok.status == 0);
    CHECK(ok.out.find("verdict: PASS") != std::string::npos);

    // swap two vertices across cycles -> duplicated pair, exit 1
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    arcs::ArcsSystem sys = arcs::system_from_json(body);
    auto& c0 = sys.almost_parallel_classes[0][0];
    auto& c1 = sys.almost_parallel_classes[0][1];
    std::vector<arcs::Vertex> v0 = c0.vertices(), v1 = c1.vertices();
    std::swap(v0[3], v1[5]);
    c0 = arcs::KCycle(v0);
    c1 = arcs::KCycle(v1);
    auto bad_path = temp_file("k15_bad.json");
    std::ofstream(bad_path) << arcs::to_json(sys);
    CmdResult bad = run("verify --input " + bad_path.string());
    CHECK(bad.status == 1);
    CHECK(bad.out.find("duplicated") != std::string::npos);

    // truncation -> parse error, exit 2
    auto trunc_path = temp_file("k15_trunc.json");
    std::ofstream(trunc_path) << body.substr(0, body.size() / 3);
    CmdResult trunc = run("verify --input " + trunc_path.string());
    CHECK(trunc.status == 2);

    CmdResult missing = run("verify --input " + temp_file("does_not_exist.json").string());
    CHECK(missing.status == 2);

    std::filesystem::remove(path);
    std::filesystem::remove(bad_path);
    std::filesystem::remove(trunc_path);
}

TEST_CASE("check-conditions prints the parameters and five lines") {
    CmdResult r13 = run("check-conditions --k 13");
    CHECK(r13.status == 0);
    int pass_lines = 0;
    for (std::size_t pos = 0; (pos = r13.out.find("PASS", pos)) != std::string::npos; ++pos)
        ++pass_lines;
    CHECK(pass_lines == 5);

    CmdResult r15 = run("check-conditions --k 15");
    CHECK(r15.status == 0);
    CHECK(r15.out.find("d2=4") != std::string::npos);
    CHECK(r15.out.find("(10,2)") != std::string::npos);

    CHECK(run("check-conditions --k 10").status == 2);
}

TEST_CASE("sweep summarizes a range") {
    CmdResult r = run("sweep --from 11 --to 19 --jobs 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("k=11 v=45 classes=22+1 edges=990 PASS") != std::string::npos);
    CHECK(r.out.find("k=19") != std::string::npos);
    CHECK(r.out.find("5 values tested, 5 passed") != std::string::npos);

    CmdResult empty = run("sweep --from 12 --to 12");
    CHECK(empty.status == 0);
    CHECK(empty.out.find("0 values tested") != std::string::npos);

    CHECK(run("sweep --from 15 --to 11").status == 2);
    CHECK(run("sweep --from 11").status == 2);  // missing required flag
}
