// Drives the installed binary end to end: exit codes, deterministic output,
// and the documented JSON surfaces.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RMK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/rmk_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("detect exit codes") {
    std::string k4 = tmp_file("k4.g6", "C~\n");
    CHECK(run("detect --graph " + k4 + " --roots 0,1,2,3 --minor k4x").exit_code == 0);
    CHECK(run("detect --graph " + k4 + " --roots 0,1,2,3 --minor w4x").exit_code == 1);

    std::string c4 = tmp_file("c4.g6", "Cr\n");  // 4-cycle 0-1-2-3
    RunResult r = run("detect --graph " + c4 + " --roots 0,1,2,3 --minor w4x --json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"obstruction\"") != std::string::npos);
    CHECK(r.out.find("\"chain\"") != std::string::npos);

    // usage errors are > 2
    CHECK(run("detect --graph /nonexistent --roots 0,1,2,3 --minor k4x").exit_code > 2);
    CHECK(run("detect --graph " + k4 + " --roots 0,1,2 --minor k4x").exit_code > 2);
}

TEST_CASE("edge list input") {
    std::string el = tmp_file("p.edges", "4\n0 1\n1 2\n2 3\n");
    RunResult r = run("detect --graph " + el + " --format edges --roots 0,1,2,3 --minor k22x");
    CHECK(r.exit_code == 1);
}

TEST_CASE("generate is deterministic and verifiable") {
    RunResult a = run("generate --class D --seed 7 --size 9 --json");
    RunResult b = run("generate --class D --seed 7 --size 9 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("generate --class B --seed 3 --json");
    CHECK(c.out.find("\"class\": \"B\"") != std::string::npos);
}

TEST_CASE("detect with a certificate reports the structural path") {
    CHECK(run("generate --class A --seed 5 --size 9 --out /tmp/rmk_test_a").exit_code == 0);
    RunResult r = run(
        "detect --graph /tmp/rmk_test_a.g6 --roots 0,1,2,3 --minor k24x "
        "--certificate /tmp/rmk_test_a.cert.json --json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("structural") != std::string::npos);
}

TEST_CASE("model emit and verify round trip, corrupted models rejected") {
    std::string k4 = tmp_file("k4v.g6", "C~\n");
    RunResult r = run("detect --graph " + k4 +
                      " --roots 0,1,2,3 --minor k4x --emit /tmp/rmk_test_model.json");
    REQUIRE(r.exit_code == 0);
    CHECK(run("verify-model --graph " + k4 +
              " --roots 0,1,2,3 --minor k4x --model /tmp/rmk_test_model.json")
              .exit_code == 0);

    // corrupt a branch set so two sets overlap
    std::ifstream in("/tmp/rmk_test_model.json");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string m = ss.str();
    size_t pos = m.find("[\n      0\n    ]");
    REQUIRE(pos != std::string::npos);
    m.replace(pos, 15, "[\n      0, 1\n    ]");
    tmp_file("model_bad.json", m);
    RunResult bad = run("verify-model --graph " + k4 +
                        " --roots 0,1,2,3 --minor k4x --model /tmp/rmk_test_model_bad.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("disjointness") != std::string::npos);
}

TEST_CASE("reduce writes a trace") {
    std::string c6 = tmp_file("c6.g6", "E]~o\n");  // not used; write an edge list instead
    std::string el = tmp_file("c6.edges", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    RunResult r = run("reduce --graph " + el +
                      " --format edges --roots 0,1,2,3 --minor w4x --trace /tmp/rmk_test_tr.json "
                      "--json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"steps\"") != std::string::npos);
    CHECK(r.out.find("\"lemma\"") != std::string::npos);
}

TEST_CASE("crosscheck smoke runs agree") {
    RunResult r = run("crosscheck --minor k22x --corpus random --n 6 --count 40 --seed 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("disagree 0") != std::string::npos);
    RunResult w = run("crosscheck --minor w4x --corpus web --n 8 --count 25 --seed 3");
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("disagree 0") != std::string::npos);
}

TEST_CASE("budget environment variable forces the undecided exit code") {
    // complete graph on 9 vertices as an edge list
    std::ostringstream k9;
    k9 << 9 << "\n";
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) k9 << u << " " << v << "\n";
    std::string path = tmp_file("k9.edges", k9.str());
    std::string cmd = "RMK_BUDGET=5 " + std::string(RMK_CLI_PATH) + " detect --graph " + path +
                      " --format edges --roots 0,1,2,3 --minor lx 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("class B certificate answers the 2x4 query structurally") {
    CHECK(run("generate --class B --seed 11 --size 8 --out /tmp/rmk_test_b").exit_code == 0);
    RunResult r = run(
        "detect --graph /tmp/rmk_test_b.g6 --roots 0,1,2,3 --minor k24x "
        "--certificate /tmp/rmk_test_b.cert.json --json");
    // 2-connected class B instances always carry it
    if (r.out.find("class-b") != std::string::npos) CHECK(r.exit_code == 0);
    else CHECK((r.exit_code == 0 || r.exit_code == 1));
}

TEST_CASE("detect json is golden-stable") {
    std::string k4 = tmp_file("k4g.g6", "C~\n");
    RunResult r = run("detect --graph " + k4 + " --roots 0,1,2,3 --minor k4x --json");
    const char* expected = R"({
  "graph6": "C~",
  "roots": [
    0,
    1,
    2,
    3
  ],
  "minor": "k4x",
  "reduction_steps": 0,
  "method": "oracle",
  "verdict": "yes",
  "model": {
    "branch_sets": {
      "v1": [
        0
      ],
      "v2": [
        1
      ],
      "v3": [
        2
      ],
      "v4": [
        3
      ]
    },
    "pattern": "k4x",
    "root_map": {
      "0": "v1",
      "1": "v2",
      "2": "v3",
      "3": "v4"
    }
  }
}
)";
    CHECK(r.out == expected);
}
