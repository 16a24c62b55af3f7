#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "neckstretch/cli.hpp"

using namespace neckstretch;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

} // namespace

TEST_CASE("witness verb", "[cli]") {
    auto res = run_cli({"witness", "--R", "29/10"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("R") == "29/10");
    CHECK(j.at("witness_degree") == 11);

    res = run_cli({"witness", "--R", "3"});
    REQUIRE(res.status == 0);
    CHECK(json::parse(res.out).at("witness_degree").is_null());

    res = run_cli({"witness", "--R", "3/2"});
    REQUIRE(res.status == 0);
    CHECK(json::parse(res.out).at("witness_degree") == "not-needed");
}

TEST_CASE("bound verb", "[cli]") {
    auto res = run_cli({"bound", "--max-degree", "11"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("target") == "polydisk:1,2");
    CHECK(j.at("bound") == "3");
    CHECK(j.at("sharp") == true);
    CHECK(j.at("inclusion") == "3");
    REQUIRE(j.at("schedule").size() == 10);
    CHECK(j.at("schedule")[0] == json::array({"2", "5/2"}));
    CHECK(j.at("schedule")[1] == json::array({"3", "8/3"}));
    CHECK(j.at("schedule")[9] == json::array({"11", "32/11"}));
}

TEST_CASE("fiber-limits emits buildings that re-validate", "[cli]") {
    auto res = run_cli({"fiber-limits", "--R", "5/2"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    REQUIRE(j.at("configs").size() == 3);
    CHECK(j.at("configs")[0].at("kind") == "closed");
    CHECK(j.at("configs")[1].at("excluded").is_null());
    CHECK(j.at("configs")[2].at("excluded") == "G1-blowdown");
    CHECK(j.at("configs")[2].at("degree0_class").at("k") == 2);

    const auto path = write_temp("neckstretch_fiber_limits.json", res.out);
    auto check = run_cli({"check-building", path.string()});
    CHECK(check.status == 0);
    CHECK(json::parse(check.out).at("valid") == true);
    CHECK(json::parse(check.out).at("buildings") == 3);
}

TEST_CASE("fiber-limits domain and parse errors", "[cli]") {
    CHECK(run_cli({"fiber-limits", "--R", "7/2"}).status == 1); // outside (1,3)
    CHECK(run_cli({"fiber-limits", "--R", "abc"}).status == 2);
    CHECK(run_cli({"fiber-limits"}).status == 2); // missing required flag
    CHECK(run_cli({"no-such-verb"}).status == 2);
    CHECK(run_cli({"witness", "--R", "5/2", "--format", "csv"}).status == 2);
}

TEST_CASE("feasible verb round-trips its witness building", "[cli]") {
    auto res = run_cli({"feasible", "--R", "5/2", "--d", "3"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("feasible") == false);
    CHECK(j.at("certificate").at("slack") == "-1/2");
    CHECK(j.at("certificate").at("inequality") == "3*(1/2) + 1 - 3 = -1/2 < 0");

    res = run_cli({"feasible", "--R", "5/2", "--d", "2"});
    REQUIRE(res.status == 0);
    j = json::parse(res.out);
    CHECK(j.at("feasible") == true);
    CHECK(j.at("config").at("area_bound") == "0");
    const auto path = write_temp("neckstretch_feasible.json",
                                 json(j.at("building")).dump());
    CHECK(run_cli({"check-building", path.string()}).status == 0);
}

TEST_CASE("capacities verb in csv and json", "[cli]") {
    auto res = run_cli({"capacities", "--domain", "polydisk:1,2", "--k-max", "5", "--format", "csv"});
    REQUIRE(res.status == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,c_k,d_k,ratio");
    std::getline(lines, line);
    CHECK(line == "0,0,0,-");
    std::getline(lines, line);
    CHECK(line == "1,1,1,1");
    std::getline(lines, line);
    CHECK(line == "2,2,1,2");

    res = run_cli({"capacities", "--domain", "polydisk:1,2", "--k-max", "100"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("bounds").at("ech") == "2");
    CHECK(j.at("bounds").at("volume") == "2");
    CHECK(j.at("bounds").at("inclusion") == "3");
    CHECK(j.at("bounds").at("folding").is_null());
    CHECK(j.at("rows").size() == 101);

    res = run_cli({"capacities", "--domain", "ball:3/2", "--k-max", "4"});
    REQUIRE(res.status == 0);
    j = json::parse(res.out);
    CHECK_FALSE(j.contains("bounds"));
    CHECK(j.at("rows")[3].at("c") == "3");

    CHECK(run_cli({"capacities", "--domain", "cube:1"}).status == 2);
    CHECK(run_cli({"capacities", "--domain", "polydisk:1,2", "--k-max", "0"}).status == 1);
}

TEST_CASE("spectrum verb", "[cli]") {
    auto res = run_cli({"spectrum", "--T", "1", "--grid", "64", "--window", "-1.5,0.5"});
    REQUIRE(res.status == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("nodes") == 65);
    REQUIRE(j.at("spectrum").size() == 2);
    CHECK(std::abs(j.at("spectrum")[0].at("eigenvalue").get<double>() + 1.0) < 1e-8);
    CHECK(std::abs(j.at("spectrum")[1].at("eigenvalue").get<double>()) < 1e-8);
    CHECK(j.at("spectrum")[0].at("winding") == 0);
    CHECK(j.at("spectrum")[0].at("multiplicity") == 1);

    res = run_cli({"spectrum", "--T", "1", "--grid", "64", "--window", "-1.5,0.5", "--format", "csv"});
    REQUIRE(res.status == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "eigenvalue,winding,multiplicity");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);

    CHECK(run_cli({"spectrum", "--T", "1", "--window", "oops"}).status == 2);
    CHECK(run_cli({"spectrum", "--T", "-1", "--grid", "64"}).status == 1);
}

TEST_CASE("check-building diagnoses the violated rule", "[cli]") {
    const std::string bad = R"({
      "schema": "1",
      "components": [
        {"level": 0, "kind": "bottom", "degree": 0, "e": 0, "genus": 0, "cover": 1,
         "ends": [{"sign": "+", "k": 1, "l": 0, "movable": true}]}
      ],
      "matchings": []
    })";
    const auto path = write_temp("neckstretch_bad_building.json", bad);
    auto res = run_cli({"check-building", path.string()});
    CHECK(res.status == 1);
    CHECK(res.err.find("contractibility rule") != std::string::npos);

    const auto missing = run_cli({"check-building", "/no/such/file.json"});
    CHECK(missing.status == 1);

    const auto junk = write_temp("neckstretch_junk.json", "{not json");
    CHECK(run_cli({"check-building", junk.string()}).status == 2);
}

TEST_CASE("identical invocations produce identical bytes", "[cli]") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"witness", "--R", "29/10"},
          std::vector<std::string>{"fiber-limits", "--R", "5/2"},
          std::vector<std::string>{"bound"},
          std::vector<std::string>{"capacities", "--domain", "polydisk:1,2", "--k-max", "20",
                                   "--format", "csv"},
          std::vector<std::string>{"spectrum", "--T", "1", "--grid", "32", "--window", "-1.5,0.5"}}) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.status == second.status);
        CHECK(first.out == second.out);
    }
}
