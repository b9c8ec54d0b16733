#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "postnikov/json_io.hpp"

using postnikov::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "/tmp/pk_cli_out.txt";
    const std::string err_file = "/tmp/pk_cli_err.txt";
    const std::string cmd =
        std::string(POSTNIKOV_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    auto slurp = [](const std::string& path) {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    return {WEXITSTATUS(status), slurp(out_file), slurp(err_file)};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("diagram command reproduces the worked example deterministically") {
    const auto r1 = run_cli("diagram --window 4,6,5,7,8,9 --labels target");
    REQUIRE(r1.code == 0);
    const auto r2 = run_cli("diagram --window 4,6,5,7,8,9 --labels target");
    CHECK(r1.out == r2.out);  // byte identical

    const json j = json::parse(r1.out);
    CHECK(j["schema"] == "v1");
    CHECK(j["faces"].size() == 9);
    std::set<std::vector<int>> boundary, internal;
    for (const auto& f : j["faces"]) {
        if (f["boundary"].get<bool>())
            boundary.insert(f["label"].get<std::vector<int>>());
        else
            internal.insert(f["label"].get<std::vector<int>>());
    }
    const std::set<std::vector<int>> expect_boundary = {{1, 2, 3}, {2, 3, 4}, {3, 4, 6},
                                                        {4, 5, 6}, {1, 5, 6}, {1, 2, 6}};
    const std::set<std::vector<int>> expect_internal = {{1, 3, 4}, {1, 3, 6}, {3, 5, 6}};
    CHECK(boundary == expect_boundary);
    CHECK(internal == expect_internal);
}

TEST_CASE("diagram --labels source renames the strand sides") {
    const auto r = run_cli("diagram --window 4,6,5,7,8,9 --labels source");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    std::set<std::vector<int>> labels;
    for (const auto& f : j["faces"]) {
        CHECK(f["label"].size() == 3);
        labels.insert(f["label"].get<std::vector<int>>());
    }
    CHECK(labels.size() == 9);                        // still pairwise distinct
    CHECK(labels.count({1, 5, 6}) == 1);              // source labels of B1
}

TEST_CASE("diagram --top-cell and dot output") {
    const auto r = run_cli("diagram --top-cell 3,6");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["permutation"]["window"] == json::parse("[4,5,6,7,8,9]"));
    CHECK(j["faces"].size() == 10);

    const auto dot = run_cli("diagram --top-cell 3,6 --format dot");
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("shape=box") != std::string::npos);
}

TEST_CASE("diagram rejects the misprinted window with exit 2") {
    const auto r = run_cli("diagram --window 3,8,7,6,2,10,9,14,13");
    CHECK(r.code == 2);
    CHECK(r.err.find("BoundsViolation") != std::string::npos);
}

TEST_CASE("certify then verify round trips through a file") {
    const auto cert = run_cli("certify --window 4,6,5,7,8,9 --out /tmp/pk_cert.json");
    REQUIRE(cert.code == 0);
    const auto ok = run_cli("verify /tmp/pk_cert.json");
    CHECK(ok.code == 0);

    json j = json::parse(std::ifstream("/tmp/pk_cert.json"));
    j["certificate"]["i"] = 5;
    write_file("/tmp/pk_cert_bad.json", j.dump());
    const auto bad = run_cli("verify /tmp/pk_cert_bad.json");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("root") != std::string::npos);
}

TEST_CASE("explore matches the finite-type counts") {
    write_file("/tmp/pk_cycle3.json", R"({"vertices":[{"id":"1","frozen":false},
      {"id":"2","frozen":false},{"id":"3","frozen":false}],
      "arrows":[{"from":"1","to":"2","mult":1},{"from":"2","to":"3","mult":1},
      {"from":"3","to":"1","mult":1}]})");
    const auto r = run_cli("explore /tmp/pk_cycle3.json");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["variables"] == 9);
    CHECK(j["seeds"] == 14);
    CHECK(j["acyclic_seeds"] == 12);

    write_file("/tmp/pk_markov.json", R"({"vertices":[{"id":"a","frozen":false},
      {"id":"b","frozen":false},{"id":"c","frozen":false}],
      "arrows":[{"from":"a","to":"b","mult":2},{"from":"b","to":"c","mult":2},
      {"from":"c","to":"a","mult":2}]})");
    const auto limit = run_cli("explore /tmp/pk_markov.json --seed-limit 100");
    CHECK(limit.code == 3);
}

TEST_CASE("banff subcommand") {
    const auto found = run_cli("banff /tmp/pk_cycle3.json");
    REQUIRE(found.code == 0);
    CHECK(json::parse(found.out)["status"] == "found");

    const auto none = run_cli("banff /tmp/pk_markov.json");
    REQUIRE(none.code == 0);
    const json j = json::parse(none.out);
    CHECK(j["status"] == "none");
    CHECK(j["explored"] == 1);
}

TEST_CASE("sweep 1 4 passes everything") {
    const auto r = run_cli("sweep 1 4");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["count"] == j["pass"]);
    CHECK(j["fail"] == 0);
}

TEST_CASE("malformed inputs exit 2") {
    CHECK(run_cli("diagram --window 4,6,5 --top-cell 3,6").code == 2);
    CHECK(run_cli("verify /tmp/definitely_missing.json").code == 2);
    write_file("/tmp/pk_garbage.json", "{not json");
    CHECK(run_cli("explore /tmp/pk_garbage.json").code == 2);
}
