#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weilform/cli.hpp"
#include "weilform/json_io.hpp"

using namespace weilform;

namespace {

struct CliResult {
    int code;
    json out;
};

CliResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"weilform"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream capture;
    auto* old = std::cout.rdbuf(capture.rdbuf());
    int code = cli_dispatch(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    CliResult r{code, json()};
    std::string text = capture.str();
    if (!text.empty()) {
        try {
            r.out = json::parse(text);
        } catch (...) {
        }
    }
    return r;
}

std::string write_temp(const json& j, const std::string& name) {
    std::string path = std::string("/tmp/weilform_test_") + name + ".json";
    std::ofstream out(path);
    out << j.dump();
    return path;
}

}  // namespace

TEST_CASE("witness subcommand emits the antidiagonal block") {
    auto r = run_cli({"witness", "--blocks", "2:1", "--sign", "-1"});
    CHECK(r.code == 0);
    REQUIRE(r.out.contains("A"));
    CHECK(r.out["A"][0][1] == "-1");
    CHECK(r.out["A"][1][0] == "1");
    // refusal: exit 1 with the violating block size
    r = run_cli({"witness", "--blocks", "2:1", "--sign", "1"});
    CHECK(r.code == 1);
    CHECK(r.out["violations"][0] == 2);
}

namespace {

json matrix_json(const std::vector<std::vector<std::string>>& rows) {
    json m = json::array();
    for (const auto& row : rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e);
        m.push_back(r);
    }
    return m;
}

}  // namespace

TEST_CASE("classify subcommand exit codes") {
    json mod;
    mod["matrix"] = matrix_json({{"1", "1"}, {"0", "1"}});
    mod["q"] = 5;
    mod["weight"] = 0;
    auto r = run_cli({"classify", "--input", write_temp(mod, "e2")});
    CHECK(r.code == 0);
    CHECK(r.out["verdict"]["minus"] == true);
    CHECK(r.out["verdict"]["plus"] == false);
    // mixed module: purity fails, exit 1
    json mixed;
    mixed["matrix"] = matrix_json({{"1", "0"}, {"0", "5"}});
    mixed["q"] = 5;
    r = run_cli({"classify", "--input", write_temp(mixed, "mixed"), "--weight", "1"});
    CHECK(r.code == 1);
    // malformed input: exit 2
    std::string bad = "/tmp/weilform_test_bad.json";
    std::ofstream(bad) << "{ not json";
    r = run_cli({"classify", "--input", bad});
    CHECK(r.code == 2);
    r = run_cli({"no-such-subcommand"});
    CHECK(r.code == 2);
}

TEST_CASE("jordan and weights subcommands") {
    json mod;
    mod["matrix"] = matrix_json({{"1", "0"}, {"0", "5"}});
    mod["q"] = 5;
    auto r = run_cli({"jordan", "--input", write_temp(mod, "j")});
    CHECK(r.code == 0);
    CHECK(r.out.contains("invariant_factors"));
    r = run_cli({"weights", "--input", write_temp(mod, "w")});
    CHECK(r.code == 0);
    CHECK(r.out["weights"].contains("0"));
    CHECK(r.out["weights"].contains("2"));
    json bad;
    bad["matrix"] = matrix_json({{"2"}});
    bad["q"] = 5;
    r = run_cli({"weights", "--input", write_temp(bad, "wb")});
    CHECK(r.code == 1);
}

TEST_CASE("kring subcommand programs") {
    json program;
    program["q"] = 5;
    program["classes"]["e"]["components"]["1"]["num"] = {"1", "-2", "5"};
    program["program"] = {{"op", "tensor"}, {"args", {"e", "e"}}};
    auto r = run_cli({"kring", "--input", write_temp(program, "kr")});
    CHECK(r.code == 0);
    CHECK(r.out["components"].contains("2"));
    json membership = program;
    membership["program"] = {{"op", "membership"}, {"sigma", 1}, {"args", {"e"}}};
    r = run_cli({"kring", "--input", write_temp(membership, "krm")});
    CHECK(r.code == 0);
    CHECK(r.out["member"] == true);
}

TEST_CASE("indicator, bg-lseries and chebotarev subcommands") {
    json rep;
    rep["group"] = "Q8";
    rep["conductor"] = 4;
    json mi = json::array();
    {
        json row0 = json::array({json::array({"0", "1"}), json::array({"0", "0"})});
        json row1 = json::array({json::array({"0", "0"}), json::array({"0", "-1"})});
        mi.push_back(json::array({row0[0], row0[1]}));
        mi.push_back(json::array({row1[0], row1[1]}));
    }
    json mj = matrix_json({{"0", "-1"}, {"1", "0"}});
    rep["matrices"] = json::array({mi, mj});
    auto r = run_cli({"indicator", "--input", write_temp(rep, "q8")});
    CHECK(r.code == 0);
    CHECK(r.out["indicator"] == "-1");
    CHECK(r.out["classification"] == "symplectic");
    r = run_cli({"bg-lseries", "--input", write_temp(rep, "q8b"), "--terms", "6"});
    CHECK(r.code == 0);
    CHECK(r.out["coefficients"].size() == 6);
    CHECK(r.out["pole_order"] == -1);
    json cheb;
    cheb["group"] = "S4";
    cheb["classes"] = json::array({0, 1});
    r = run_cli({"chebotarev", "--input", write_temp(cheb, "cheb")});
    CHECK(r.code == 0);
    CHECK(r.out["lhs"] == r.out["rhs"]);
}

TEST_CASE("ih-check and mixed-check subcommands") {
    json p1;
    p1["q"] = 5;
    p1["kind"] = "intersection";
    p1["entries"] = json::array({json{{"n", 0}, {"poly", json::array({"1", "-1"})}},
                                 json{{"n", 2}, {"poly", json::array({"1", "-5"})}}});
    auto r = run_cli({"ih-check", "--input", write_temp(p1, "p1")});
    CHECK(r.code == 0);
    json doctored;
    doctored["q"] = 9;
    doctored["kind"] = "intersection";
    doctored["entries"] = json::array({json{{"n", 1}, {"poly", json::array({"1", "-3"})}}});
    r = run_cli({"ih-check", "--input", write_temp(doctored, "doc")});
    CHECK(r.code == 1);
    json ord = doctored;
    ord["kind"] = "ordinary";
    r = run_cli({"mixed-check", "--input", write_temp(ord, "ord")});
    CHECK(r.code == 1);
}
