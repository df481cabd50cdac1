#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lchoose/interchange.hpp"

namespace fs = std::filesystem;
using lchoose::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("lchoose_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = std::string(LCHOOSE_CLI) + " " + args + " > " + out.string() + " 2> " +
                            (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("phi command") {
    auto r = run("phi --lambda 1,3");
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    CHECK(j["phi"] == 12);
    CHECK(j["schema"] == lchoose::kSchema);
    CHECK(j["previous_bounds"]["lower"] == 11);

    r = run("phi -l 1,1");
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["phi"] == "infinite");

    CHECK(run("phi --lambda 0,2").code == 3);
    CHECK(run("phi").code == 3);
    CHECK(run("nonsense").code == 3);
}

TEST_CASE("solve command") {
    const auto k33 = write("k33.json", R"({"universe": 3, "lists": [[0,1],[0,2],[1,2],[0,1],[0,2],[1,2]],
                                          "partition": null, "lambda": null})");
    auto r = run("solve -g 3,3 -a " + k33);
    CHECK(r.code == 1);
    CHECK(json_of(r)["colouring"] == "none");

    const auto k2 = write("k2.json", R"({"universe": 2, "lists": [[0],[1]], "graph": [1,1]})");
    r = run("solve --assignment " + k2);
    CHECK(r.code == 0);
    CHECK(json_of(r)["colouring"] == Json::parse("[0,1]"));

    CHECK(run("solve -g 1,1 -a " + write("bad.json", "{not json")).code == 3);
    CHECK(run("solve -g 1,1 -a " + write("wrong.json", R"({"universe": 2, "lists": [[0],[3]]})")).code == 3);
    CHECK(run("solve -g 2,2 -a " + k2).code == 3);
}

TEST_CASE("check command exit codes") {
    auto r = run("check -g 3,3 -l 2 --threads 1");
    CHECK(r.code == 1);
    auto j = json_of(r);
    CHECK(j["status"] == "NOT_CHOOSABLE");
    CHECK_FALSE(j["counterexample"].is_null());

    r = run("check -g 2,2 -l 2");
    CHECK(r.code == 0);
    CHECK(json_of(r)["exhaustive"] == true);

    r = run("check -g 5,5,2,2 -l 1,3 --budget-nodes 10");
    CHECK(r.code == 2);
    CHECK(json_of(r)["status"] == "INCONCLUSIVE");

    CHECK(run("check -g 3,3").code == 3);
}

TEST_CASE("thread count does not change payloads") {
    const auto a = run("check -g 4,2 -l 2 --threads 1");
    const auto b = run("check -g 4,2 -l 2 --threads 3");
    auto ja = json_of(a);
    auto jb = json_of(b);
    ja.erase("nodes");
    jb.erase("nodes");
    CHECK(ja == jb);
    const auto env = run("check -g 4,2 -l 2");
    CHECK(env.code == a.code);
}

TEST_CASE("gen output round-trips through solve and check") {
    const auto dir = (scratch() / "gen").string();
    const auto lemma = write("lemma.json", R"({"family": "lemma1", "params": {"a": 1, "b": 0, "c": 1}})");
    auto r = run("gen " + lemma + " --out " + dir);
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    REQUIRE(j["files"].size() == 1);
    const std::string file = j["files"][0];
    CHECK(run("solve -a " + file).code == 1);
    auto c = run("check -l 1,3 -a " + file);
    CHECK(c.code == 1);
    CHECK(json_of(c)["lambda_valid"] == true);

    const auto k42 = write("k42.json", R"({"family": "k42", "params": {"k": 2}})");
    r = run("gen " + k42 + " --out " + dir);
    REQUIRE(r.code == 0);
    for (const auto& f : json_of(r)["files"]) {
        CHECK(run("solve -a " + f.get<std::string>()).code == 1);
        CHECK(run("check -l 2 -a " + f.get<std::string>()).code == 1);
        CHECK(run("check -l 1,1 -a " + f.get<std::string>()).code == 0);
    }

    const auto threes = write("threes.json", R"({"family": "threes", "params": {"k": 4, "count": 2}})");
    r = run("gen " + threes + " --out " + dir);
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["files"].size() == 2);

    CHECK(run("gen " + write("unknown.json", R"({"family": "nope", "params": {}})")).code == 3);
    CHECK(run("gen " + write("missing.json", R"({"family": "lemma1", "params": {"a": 1}})")).code == 3);
}

TEST_CASE("verify command") {
    auto r = run("verify phi2-exhaustive");
    CHECK(r.code == 0);
    CHECK(json_of(r)["passed"] == true);
    CHECK(run("verify tuple-audit").code == 0);
    CHECK(run("verify no-such").code == 3);
}

TEST_CASE("search, tuple and recipe commands") {
    const auto dir = (scratch() / "search").string();
    auto r = run("search -l 2 --n-max 6 --out " + dir);
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["minimum"] == 6);
    int refs = 0;
    for (const auto& cell : j["cells"]) {
        if (!cell["counterexample_ref"].is_null()) {
            ++refs;
            CHECK(run("solve -a " + cell["counterexample_ref"].get<std::string>()).code == 1);
        }
    }
    CHECK(refs == 2);

    r = run("search -l 1,1 --n-max 10");
    CHECK(r.code == 0);
    CHECK(json_of(r)["trivial"] == true);

    r = run("tuple --caps 0,2,1,0 --kt 3");
    CHECK(r.code == 0);
    CHECK(json_of(r)["tuple"] == Json::parse("[0,2,1,0]"));

    r = run("recipes --kt 3 --i2 0 --i3 0 --case 2");
    CHECK(r.code == 0);
    CHECK(json_of(r)["tuples"][0]["tuple"] == Json::parse("[1,0,2,0]"));
    CHECK(run("recipes --kt 4 --i2 0 --i3 0 --case 1").code == 3);
}
