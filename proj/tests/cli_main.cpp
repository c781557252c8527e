#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve: triangle is all-odd yes with a verified 3-cycle") {
    RunResult r = run_cli("solve " + fixture("triangle.txt") + " --constraint all-odd --method exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "cycle e0+ e1+ e2+\n");
}

TEST_CASE("solve: poly method matches on plain graphs") {
    RunResult r = run_cli("solve " + fixture("triangle.txt") + " --method poly");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "cycle e0+ e1+ e2+\n");
}

TEST_CASE("solve: trees have no 2-factor") {
    RunResult r = run_cli("solve " + fixture("tree.txt"));
    CHECK(r.exit_code == 1);
    CHECK(r.out == "No\n");
}

TEST_CASE("solve: no polynomial method for mixed graphs") {
    RunResult r = run_cli("solve " + fixture("mixed.txt") + " --method poly");
    CHECK(r.exit_code == 2);
}

TEST_CASE("solve: terminal-set instances go through the Steiner solver") {
    RunResult r = run_cli("solve " + fixture("fig6a.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cycle") == 0);
}

TEST_CASE("solve: parse failures and missing files exit 2") {
    CHECK(run_cli("solve " + fixture("bad.txt")).exit_code == 2);
    CHECK(run_cli("solve /nonexistent/file.txt").exit_code == 2);
}

TEST_CASE("reduce: the 2VDP example grows to 18 vertices") {
    RunResult r = run_cli("reduce vdp-existsodd " + fixture("fig3a.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("g directed 18\n") != std::string::npos);
    CHECK(r.out.find("# constraint: exists-odd\n") != std::string::npos);
}

TEST_CASE("reduce: single-arc ham instance gives 5 vertices and 6 arcs") {
    RunResult r = run_cli("reduce ham-allodd " + fixture("ham1.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("g directed 5\n") != std::string::npos);
    int arc_lines = 0;
    for (std::size_t pos = 0; (pos = r.out.find("\na ", pos)) != std::string::npos; ++pos)
        ++arc_lines;
    CHECK(arc_lines == 6);
}

TEST_CASE("reduce: unknown reduction id exits 2") {
    CHECK(run_cli("reduce no-such-id " + fixture("triangle.txt")).exit_code == 2);
}

TEST_CASE("reduce output re-parses and solves") {
    RunResult reduced = run_cli("reduce ham-allodd " + fixture("ham1.txt"));
    REQUIRE(reduced.exit_code == 0);
    auto path = temp_file("cyclefactor_reduced.txt", reduced.out);
    RunResult solved = run_cli("solve " + path.string() + " --constraint all-odd");
    CHECK(solved.exit_code == 0);
}

TEST_CASE("mapback: target solution maps to a source solution") {
    RunResult reduced = run_cli("reduce ham-allodd " + fixture("ham1.txt"));
    REQUIRE(reduced.exit_code == 0);
    auto target_path = temp_file("cyclefactor_target.txt", reduced.out);
    RunResult solved = run_cli("solve " + target_path.string() + " --constraint all-odd");
    REQUIRE(solved.exit_code == 0);
    auto solution_path = temp_file("cyclefactor_solution.txt", solved.out);
    RunResult back =
        run_cli("mapback ham-allodd " + fixture("ham1.txt") + " " + solution_path.string());
    CHECK(back.exit_code == 0);
    CHECK(back.out == "path a0\n");
}

TEST_CASE("mapback: a factor of the wrong graph exits 2") {
    auto bogus = temp_file("cyclefactor_bogus.txt", "cycle a40+ a41+\n");
    RunResult back = run_cli("mapback ham-allodd " + fixture("ham1.txt") + " " + bogus.string());
    CHECK(back.exit_code == 2);
}

TEST_CASE("equivcheck: clean run exits 0 and reports OK") {
    RunResult r = run_cli("equivcheck mcf-existseven --count 6 --max-size 3 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OK: 6 instances, 0 mismatches") != std::string::npos);
}

TEST_CASE("equivcheck: exhaustive mode is rejected off lift-undirected") {
    RunResult r = run_cli("equivcheck ham-allodd --count exhaustive --max-size 2");
    CHECK(r.exit_code == 2);
}

TEST_SUITE_END();
