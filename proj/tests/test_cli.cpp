#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("build command") {
    const auto r = run_cli("build --n 3 --format edges");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "# topograph n=3 order=6 size=6\n1 2\n1 4\n1 6\n2 4\n2 5\n3 4\n");

    const auto dot = run_cli("build --n 2 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("1 -- 2;") != std::string::npos);
    CHECK(dot.output.find("label=\"{1}\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("build --n 20").exit_code == 3);     // range error
    CHECK(run_cli("build").exit_code == 2);            // missing flag
    CHECK(run_cli("bogus").exit_code == 2);            // unknown command
    CHECK(run_cli("build --n 3 --format csv").exit_code == 2);
    CHECK(run_cli("compose --op corona --left topo:3 --right nope").exit_code ==
          2);
}

TEST_CASE("invariants command") {
    const auto r = run_cli("invariants --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order: 2\n") != std::string::npos);
    CHECK(r.output.find("radius: 1\n") != std::string::npos);
    CHECK(r.output.find("diameter: 1\n") != std::string::npos);
    CHECK(r.output.find("domination_number: 1\n") != std::string::npos);

    const auto j = run_cli("invariants --n 4 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("\"independence_number\": 7") != std::string::npos);
    CHECK(j.output.find("\"domination_number\": 4") != std::string::npos);
    CHECK(j.output.find("\"size\": 25") != std::string::npos);
}

TEST_CASE("verify command") {
    const auto r = run_cli("verify --n-min 3 --n-max 3 --format csv");
    CHECK(r.exit_code == 0);  // refuted claims still mean a successful run
    CHECK(r.output.find("BETA-EQ-GAMMA,3,equal,equal,CONFIRMED") !=
          std::string::npos);
    CHECK(r.output.find("BETA-STATED,3,6,3,REFUTED") != std::string::npos);

    const auto r5 = run_cli("verify --n-min 5 --n-max 5 --format csv");
    CHECK(r5.exit_code == 0);
    CHECK(r5.output.find("BETA-EXAMPLE,5,15,15,CONFIRMED") !=
          std::string::npos);
}

TEST_CASE("compose command") {
    const auto c = run_cli(
        "compose --op corona --left topo:3 --right topo:2 "
        "--invariant domination");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "6\n");

    const auto j1 = run_cli(
        "compose --op join --left topo:2 --right topo:3 "
        "--invariant domination");
    CHECK(j1.output == "1\n");

    const auto j2 = run_cli(
        "compose --op join --left topo:3 --right topo:3 "
        "--invariant domination");
    CHECK(j2.output == "2\n");

    const auto graph = run_cli("compose --op join --left topo:2 --right topo:2");
    CHECK(graph.exit_code == 0);
    CHECK(graph.output.find("# graph order=4 size=6") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    const auto a = run_cli("verify --n-min 2 --n-max 3 --format json");
    const auto b = run_cli("verify --n-min 2 --n-max 3 --format json");
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}
