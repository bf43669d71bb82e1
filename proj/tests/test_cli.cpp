#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = romankit::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("gamma and gamma-rk") {
    const std::string p4 = temp_file("p4.el", "4 3\n0 1\n1 2\n2 3\n");
    auto r = run({"gamma", p4});
    CHECK(r.code == 0);
    CHECK(r.out == "gamma 2\nwitness 0 2\n");
    r = run({"gamma-rk", "--k", "2", p4});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("gamma_rk 3\n", 0) == 0);
    r = run({"--json", "gamma-rk", "--k", "2", p4});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("gamma_rk") == 3);
    CHECK(j.at("function").size() == 4);
    // stdin, sniffed as graph6
    CHECK(run({"gamma"}, "Ch\n").out == "gamma 2\nwitness 0 2\n");
    CHECK(run({"gamma", "-"}, "4 3\n0 1\n1 2\n2 3\n").code == 0);
}

TEST_CASE("classify exit codes") {
    const auto sun4 = run({"gen", "sun", "--t", "4"});
    REQUIRE(sun4.code == 0);
    auto r = run({"classify", "--k", "2"}, sun4.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("k_roman true") != std::string::npos);

    const auto cosun6 = run({"gen", "cosun", "--t", "6"});
    r = run({"classify", "--k", "2"}, cosun6.out);
    CHECK(r.code == 1);
    CHECK(r.out.find("k_roman false") != std::string::npos);

    r = run({"--json", "classify", "--k", "2"}, cosun6.out);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("gamma") == 2);
    CHECK(j.at("gamma_rk") == 3);
    CHECK(j.at("k_roman") == false);

    CHECK(run({"classify", "--k", "1"}, sun4.out).code == 2);
}

TEST_CASE("decompose") {
    const std::string p4 = temp_file("p4d.el", "4 3\n0 1\n1 2\n2 3\n");
    auto r = run({"decompose", p4});
    CHECK(r.code == 0);
    CHECK(r.out.find("factors 2") != std::string::npos);
    CHECK(r.out.find("note: default maximum-clique partition") != std::string::npos);
    CHECK(r.out.find("prime false") != std::string::npos);

    const std::string part = temp_file("p4.part", "K 1 2\nI 0 3\n");
    r = run({"--json", "decompose", p4, "--partition", part});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("factors").size() == 2);
    CHECK(j.at("default_partition") == false);

    const std::string bad = temp_file("bad.part", "K 1 2\nQ 0 3\n");
    r = run({"decompose", p4, "--partition", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    const auto sun5 = run({"gen", "sun", "--t", "5"});
    CHECK(run({"decompose"}, sun5.out).out.find("prime true") != std::string::npos);
}

TEST_CASE("check-function") {
    const std::string p4 = temp_file("p4f.el", "4 3\n0 1\n1 2\n2 3\n");
    const std::string good = temp_file("good.w", "2\n0 2 0 1\n");
    const std::string weak = temp_file("weak.w", "2\n0 1 0 1\n");
    const std::string wrong_k = temp_file("k3.w", "3\n0 2 0 1\n");
    const std::string junk = temp_file("junk.w", "2\n0 2 x 1\n");
    CHECK(run({"check-function", "--k", "2", "--function", good, p4}).out == "valid true\nweight 3\n");
    CHECK(run({"check-function", "--k", "2", "--function", weak, p4}).code == 1);
    CHECK(run({"check-function", "--k", "2", "--function", wrong_k, p4}).code == 2);
    const auto r = run({"check-function", "--k", "2", "--function", junk, p4});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("split-partition") {
    auto r = run({"split-partition"}, "4 3\n0 1\n1 2\n2 3\n");
    CHECK(r.code == 0);
    CHECK(r.out == "split true\nK 1 2\nI 0 3\n");
    r = run({"split-partition"}, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(r.code == 1);
    CHECK(r.out == "split false\n");
}

TEST_CASE("generators") {
    CHECK(run({"gen", "sun", "--t", "3"}).out == "E}Y_\n");  // checked against networkx
    auto r = run({"--output-format", "el", "gen", "middle"}, "A_\n");
    CHECK(r.out == "3 2\n0 2\n1 2\n");
    const std::string tri = temp_file("tri.hg", "6 2\n0 1 2\n3 4 5\n");
    r = run({"--json", "gen", "reduce", "--k", "3", tri});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 8);
    CHECK(j.at("partition").at("clique") == nlohmann::json::array({6, 7}));
    r = run({"classify", "--k", "3"}, run({"gen", "reduce", "--k", "3", tri}).out);
    CHECK(r.code == 0);
    CHECK(run({"gen", "incidence", tri}).code == 0);
    CHECK(run({"gen", "compat-split", tri}).code == 0);
    CHECK(run({"gen", "sun", "--t", "2"}).code == 2);
    CHECK(run({"gen", "reduce", "--k", "2", tri}).code == 2);  // not 2-uniform
}

TEST_CASE("hypergraph commands") {
    const std::string c5 = temp_file("c5.hg", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    const std::string c4 = temp_file("c4.hg", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(run({"hyper", "pm", c5}).code == 1);
    auto r = run({"hyper", "pm", c4});
    CHECK(r.code == 0);
    CHECK(r.out == "perfect_matching true\nedges 0 2\n");
    CHECK(run({"hyper", "rho", c5}).out == "rho 3\n");
    CHECK(run({"hyper", "rho"}, "3 1\n0 1\n").code == 2);
    r = run({"hyper", "pm"}, "3 2\n0 1\n1 7\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "suns", "--max-t", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "suite suns: pass (4 instances checked)\n");
    r = run({"--json", "verify", "--suite", "co-suns", "--max-t", "5"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("checked") == 3);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"verify", "--suite", "sandwich", "--max-n", "12"}).code == 2);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gamma-rk", "-"}, "A_\n").code == 2);  // missing --k
    CHECK(run({"gamma", "/nonexistent/file.g6"}).code == 2);
    auto r = run({"gamma"}, "4 3\n0 1\n1 1\n2 3\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    r = run({"--format", "g6", "gamma"}, "\nC!\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"--format", "hg", "gamma"}, "A_\n").code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
    const std::string s = run({"gen", "cosun", "--t", "5"}).out;
    const auto a = run({"--json", "gamma-rk", "--k", "2"}, s);
    const auto b = run({"--json", "gamma-rk", "--k", "2"}, s);
    CHECK(a.out == b.out);
    CHECK(run({"--json", "verify", "--suite", "bertossi", "--max-n", "5"}).out ==
          run({"--json", "verify", "--suite", "bertossi", "--max-n", "5"}).out);
}
