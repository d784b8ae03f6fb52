#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jordanrep/cli.hpp"

using namespace jordanrep;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nf prints the PBW form") {
    const auto r = cli({"--no-cache", "nf", "--expr", "x*y^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "y^2*x + 2*y^3\n");
    const auto j = cli({"nf", "--expr", "x*y", "--json", "--no-cache"});
    CHECK(nlohmann::json::parse(j.out)["normal_form"] == "y*x + y^2");
}

TEST_CASE("input errors exit with 1") {
    CHECK(cli({"--no-cache", "nf", "--expr", "x^-2"}).code == 1);
    CHECK(cli({"--no-cache", "solve", "--partition", "1,3"}).code == 1);
    CHECK(cli({"--no-cache", "strata", "--n", "0"}).code == 1);
    CHECK(cli({"--no-cache", "ext", "--alpha", "1/0", "--beta", "1"}).code == 1);
    CHECK(cli({"--no-cache", "aut", "--alpha", "0", "--poly", "y"}).code == 1);
    CHECK(cli({"--no-cache", "aut", "--alpha", "1", "--poly", "x"}).code == 1);
    CHECK(cli({"--no-cache", "endo", "--file", "/nonexistent/file.json"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("strata json") {
    const auto r = cli({"--json", "--no-cache", "strata", "--n", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["partition_count"] == 5);
    for (const auto& s : j["strata"]) CHECK(s["total_dim"] == 16);
}

TEST_CASE("solve reports the fiber") {
    const auto j = nlohmann::json::parse(cli({"--json", "--no-cache", "solve", "--partition", "2,1"}).out);
    CHECK(j["fiber_dim"] == 5);
    CHECK(j["centralizer_formula"] == 5);
    CHECK(j["all_block_toeplitz"] == true);
}

TEST_CASE("ext, aut and presentation") {
    CHECK(cli({"--no-cache", "ext", "--alpha", "1/2", "--beta", "1/2"}).out.find("dim 2") != std::string::npos);
    CHECK(cli({"--no-cache", "ext", "--alpha", "1/2", "--beta", "3"}).out.find("dim 0") != std::string::npos);
    const auto a = cli({"--json", "--no-cache", "aut", "--alpha", "2", "--poly", "y^2 - 1", "--compose", "-1", "3*y"});
    REQUIRE(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["endomorphism"] == true);
    CHECK(j["inverse_verified"] == true);
    CHECK(j["composite_matches_substitution"] == true);
    const auto p = nlohmann::json::parse(cli({"--json", "--no-cache", "presentation", "--n", "3"}).out);
    CHECK(p["image_dim"] == 4);
    CHECK(p["quotient_dim"] == 4);
    CHECK(cli({"--no-cache", "presentation", "--n", "3", "--degree", "1"}).code == 1);
}

TEST_CASE("sample output feeds endo and indec") {
    const fs::path dir = fs::path(JORDANREP_TEST_TMP) / "cli_files";
    fs::create_directories(dir);
    const auto s = cli({"--json", "--no-cache", "sample", "--partition", "2,1", "--count", "2", "--seed", "4"});
    REQUIRE(s.code == 0);
    std::ofstream(dir / "samples.json") << s.out;
    const auto file = (dir / "samples.json").string();
    const auto e = cli({"--json", "--no-cache", "endo", "--file", file, "--index", "1"});
    REQUIRE(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["semisimple_dim"] == 2);
    CHECK(cli({"--no-cache", "indec", "--file", file}).out.find("NotAbsolutelyIndecomposable") == 0);
    CHECK(cli({"--no-cache", "indec", "--file", file, "--index", "7"}).code == 1);
    std::ofstream(dir / "bad.json") << "{";
    CHECK(cli({"--no-cache", "indec", "--file", (dir / "bad.json").string()}).code == 1);
}

TEST_CASE("output is deterministic and the cache is transparent") {
    const fs::path dir = fs::path(JORDANREP_TEST_TMP) / "cli_cache";
    fs::remove_all(dir);
    const std::vector<std::string> args{"--cache-dir", dir.string(), "image", "--n", "3", "--samples", "2", "--seed", "9"};
    const auto first = cli(args), second = cli(args);
    const auto uncached = cli({"--no-cache", "image", "--n", "3", "--samples", "2", "--seed", "9"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == uncached.out);
    CHECK(fs::exists(dir / "results.jsonl"));
}

TEST_CASE("verify on a small range") {
    const auto r = cli({"verify", "--max-n", "3", "--samples", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all claims pass") != std::string::npos);
}
