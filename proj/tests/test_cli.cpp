// Copyright 2026 The secant-census Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secant/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace secant;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "secant-census");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("macdonald")
{
    auto r = run({"macdonald", "--g", "6", "--s", "2", "--m", "6", "--d", "2", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "4");
    CHECK(r.out.find("rho=0 mu=0") != std::string::npos);
    r = run({"macdonald", "--g", "3", "--s", "2", "--m", "4", "--d", "2", "--r", "1"});
    CHECK(first_line(r.out) == "0");
    r = run({"macdonald", "--g", "10", "--s", "4", "--m", "12", "--d", "6", "--r", "3", "--version", "two"});
    CHECK(first_line(r.out) == "41");
    r = run({"macdonald", "--g", "10", "--s", "4", "--m", "12", "--d", "3", "--r", "1", "--version", "closed"});
    CHECK(first_line(r.out) == "40");
    CHECK(run({"macdonald", "--g", "6", "--s", "2", "--m", "6", "--d", "2", "--r", "0"}).code == exit_usage);
    CHECK(run({"macdonald", "--g", "6", "--s", "3", "--m", "6", "--d", "2", "--r", "1", "--version", "closed"}).code ==
          exit_usage);
    CHECK(run({"macdonald", "--g", "6"}).code == exit_usage);
}

TEST_CASE("count")
{
    CHECK(first_line(run({"count", "--case", "r1", "--t", "1", "--u", "2", "--method", "brute"}).out) == "4");
    CHECK(first_line(run({"count", "--case", "r1", "--t", "2", "--u", "2", "--method", "stratified"}).out) == "40");
    CHECK(first_line(run({"count", "--case", "rs1", "--r", "3", "--u", "1"}).out) == "0");
    CHECK(first_line(run({"count", "--case", "rs1", "--r", "3", "--u", "2", "--method", "stratified"}).out) == "41");
    CHECK(run({"count", "--case", "rs1", "--t", "3", "--u", "1"}).code == exit_usage);
    CHECK(run({"count", "--case", "r1", "--t", "6", "--u", "20", "--method", "brute"}).code == exit_usage);
    CHECK(run({"count", "--case", "r2", "--t", "1", "--u", "1"}).code == exit_usage);
}

TEST_CASE("JSON records carry decimal strings and round-trip")
{
    const auto r = run({"--format", "json", "count", "--case", "r1", "--t", "3", "--u", "5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].is_string());
    const auto again = run({"count", "--case", "r1", "--t", std::to_string(j["t"].get<int>()), "--u",
                            std::to_string(j["u"].get<int>())});
    CHECK(first_line(again.out) == j["value"].get<std::string>());
    const auto m = run({"macdonald", "--g", "6", "--s", "2", "--m", "6", "--d", "2", "--r", "1", "--format", "json"});
    const auto jm = nlohmann::json::parse(m.out);
    CHECK(jm["value"] == "4");
    CHECK(jm["rho"] == "0");
}

TEST_CASE("table")
{
    auto r = run({"table", "--what", "nk", "--d", "2..6"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "d,k,value");
    CHECK(r.out.find("\n4,2,148\n") != std::string::npos);
    r = run({"table", "--what", "nk", "--d", "5"});
    CHECK(r.out == "d,k,value\n5,0,3264\n5,1,16920\n5,2,11664\n5,3,920\n");
    r = run({"table", "--what", "counts", "--case", "r1", "--t", "1", "--u", "1..3"});
    CHECK(r.out == "case,param,u,value\nr1,1,1,0\nr1,1,2,4\nr1,1,3,12\n");
    r = run({"table", "--what", "counts", "--case", "rs1", "--r", "2..3", "--u", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["value"] == "13");
    CHECK(j[1]["value"] == "41");
    CHECK(run({"table", "--what", "nk", "--d", "6..2"}).code == exit_usage);
    CHECK(run({"table", "--what", "nk", "--d", "x"}).code == exit_usage);
    CHECK(run({"table", "--what", "nk", "--output", "/nonexistent/dir/out.csv"}).code == exit_usage);

    const auto path = std::filesystem::temp_directory_path() / "secant_census_table.csv";
    CHECK(run({"table", "--what", "nk", "--d", "3", "--output", path.string()}).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "d,k,value\n3,0,40\n3,1,24\n");
    std::filesystem::remove(path);
}

TEST_CASE("verify suites")
{
    auto r = run({"verify", "--suite", "identities", "--max-d", "4", "--max-u", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run({"verify", "--suite", "claims", "--format", "json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("check"))
            CHECK(j["pass"] == true);
        ++records;
    }
    CHECK(records == 11);
    CHECK(run({"verify", "--suite", "identities", "--max-d", "9"}).code == exit_usage);
    CHECK(run({"verify", "--suite", "bogus"}).code == exit_usage);
    CHECK(run({"verify", "--suite", "fixtures", "--fixtures", "/nonexistent"}).code == exit_usage);
}

TEST_CASE("the fixtures suite reports the incompatible node of the ambient table")
{
    const auto r = run({"verify", "--suite", "fixtures"});
    CHECK(r.code == exit_verification_failed);
    CHECK(r.out.find("FAIL fixtures ambient_compatible d=10 components=13  incompatible at Z4-Z5") != std::string::npos);
    CHECK(r.out.find("PASS fixtures included_compatible") != std::string::npos);
}

TEST_CASE("usage")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"--format", "csv", "count", "--case", "r1", "--t", "1", "--u", "2"}).code == exit_usage);
}
