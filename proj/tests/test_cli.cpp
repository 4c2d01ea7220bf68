// Copyright 2026 The hyperslice Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperslice/cli.hpp"
#include "hyperslice/core.hpp"
#include "hyperslice/fixtures.hpp"
#include "hyperslice/io.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace hyperslice;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("hyperslice_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("selftest") {
  const Run r = run_cli({"--selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
  const Run j = run_cli({"--selftest", "--json"});
  CHECK(Json::parse(j.out)["pass"] == true);
}

TEST_CASE("verify exit codes") {
  SUBCASE("full") {
    const Run r = run_cli({"verify", "--fixture", "eq1_q10_8planes"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "sliced=5120/5120");
  }
  SUBCASE("partial") {
    const Run r = run_cli({"verify", "--fixture", "appC_q15_12planes"});
    CHECK(r.code == 1);
    CHECK(first_line(r.out) == "sliced=245628/245760");
  }
  SUBCASE("partial through the reduced path") {
    const Run r = run_cli({"verify", "--fixture", "appC_q15_12planes", "--max-dimension", "10",
                       "--json"});
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["sliced"] == 245628);
    CHECK(j["method"] == "reduced 13,1,1");
  }
  SUBCASE("truncated line") {
    const auto path = temp_file("truncated.txt", "1 1 1 0.5\n1 1 0.5\n");
    const Run r = run_cli({"verify", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("missing file") {
    CHECK(run_cli({"verify", "/nonexistent/planes.txt"}).code == 2);
  }
  SUBCASE("no input") {
    CHECK(run_cli({"verify"}).code == 2);
  }
  SUBCASE("unknown fixture") {
    CHECK(run_cli({"verify", "--fixture", "nope"}).code == 2);
  }
}

TEST_CASE("verify lists unsliced edges") {
  const auto path = temp_file("one_plane.txt", "# one plane\n1 1 0 0.5\n");
  const Run r = run_cli({"verify", path.string(), "--list-unsliced", "--json"});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  const PlaneSet planes = read_construction_file(path.string());
  CHECK(j["sliced"] == testing::naive_count(planes));
  CHECK(j["unsliced"].size() == 12 - testing::naive_count(planes));
  for (const auto& e : j["unsliced"]) {
    const Edge edge{3, e["lower"].get<std::uint64_t>(), e["dim"].get<int>()};
    CHECK_FALSE(slices(planes[0], edge));
  }
  const Run text = run_cli({"verify", path.string(), "--list-unsliced"});
  int lines = 0;
  std::istringstream in(text.out);
  for (std::string line; std::getline(in, line);) lines += line.rfind("unsliced", 0) == 0;
  CHECK(lines == static_cast<int>(j["unsliced"].size()));
}

TEST_CASE("bound, table and reduce-info") {
  CHECK(first_line(run_cli({"bound", "--n", "10"}).out) == "8");
  CHECK(run_cli({"bound", "--n", "16"}).out == "13\nchain=10:8+6:5\n");
  CHECK(run_cli({"bound", "--n", "0"}).code == 2);
  CHECK(run_cli({"bound"}).code == 2);

  const Run t = run_cli({"table", "--n", "10", "--k", "8"});
  CHECK(t.code == 0);
  CHECK(first_line(t.out) == "S(10,8)=5120 provenance=paper-table source=best-known full");
  CHECK(run_cli({"table", "--n", "4", "--k", "5"}).code == 2);
  const Json rows = Json::parse(run_cli({"table", "--n", "12", "--json"}).out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["value"] == 24552);

  const Run info = run_cli({"reduce-info", "--composition", "6,1,1,1,1", "--n", "10"});
  CHECK(first_line(info.out) == "|V|=112 |E|=320");
  const Json ij = Json::parse(run_cli({"reduce-info", "--composition", "6,1,1,1,1", "--json"}).out);
  std::int64_t edges = 0, weighted = 0;
  for (const auto& h : ij["histogram"]) {
    edges += h["edges"].get<std::int64_t>();
    weighted += h["edges"].get<std::int64_t>() * h["multiplicity"].get<std::int64_t>();
  }
  CHECK(edges == 320);
  CHECK(weighted == 5120);
  CHECK(run_cli({"reduce-info", "--composition", "6,1,1,1,1", "--n", "9"}).code == 2);
}

TEST_CASE("fixtures round-trip through the CLI") {
  for (const auto& f : fixtures()) {
    const Run r = run_cli({"fixtures", "--show", std::string(f.name)});
    CHECK(r.code == 0);
    CHECK(r.out == f.text);
  }
  CHECK(Json::parse(run_cli({"fixtures", "--json"}).out).size() == fixtures().size());
}

TEST_CASE("search report re-verifies") {
  const auto out_path = std::filesystem::temp_directory_path() / "hyperslice_test_out.txt";
  std::filesystem::remove(out_path);
  const Run r = run_cli({"search", "--n", "6", "--k", "5", "--composition", "3,1,1,1", "--seed", "2",
                     "--time-limit", "60", "--json", "--out", out_path.string()});
  REQUIRE(r.code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["sliced"] == 192);
  CHECK(report["total"] == 192);
  CHECK(report["reduced_total"] == 72);
  CHECK(report["config"]["seed"] == 2);
  CHECK(report["config"]["max_iterations"] == 50 * 72);

  const auto report_path = temp_file("report.json", r.out);
  const Run v = run_cli({"verify", report_path.string(), "--json"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["matches_claim"] == true);

  CHECK(run_cli({"verify", out_path.string()}).out == "sliced=192/192\n");
  CHECK(slurp(out_path) == report["construction"].get<std::string>());

  Json forged = report;
  forged["sliced"] = 191;
  const auto forged_path = temp_file("forged.json", forged.dump());
  CHECK(run_cli({"verify", forged_path.string()}).code == 2);

  const Run text = run_cli({"search", "--n", "6", "--k", "5", "--composition", "3,1,1,1", "--seed",
                        "2", "--time-limit", "60"});
  CHECK(text.out.find("\nsliced=192/192 reduced=72/72\n") != std::string::npos);
}

TEST_CASE("tabu through the CLI") {
  const Run r = run_cli({"tabu", "--n", "6", "--k", "3", "--composition", "2,2,1,1", "--coeff-bound",
                     "5", "--max-restarts", "2", "--stagnation", "500", "--json"});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "tabu");
  CHECK(j["restarts"] == 2);
  CHECK(j["config"]["stagnation"] == 500);
  const PlaneSet planes = parse_construction(j["construction"].get<std::string>());
  CHECK(count_sliced(planes) == j["sliced"].get<std::int64_t>());

  const auto start = temp_file("start.txt", std::string(fixture("eq1_q10_8planes").text));
  const Run s = run_cli({"tabu", "--k", "8", "--composition", "6,1,1,1,1", "--freeze-block", "-2",
                     "--coeff-bound", "10", "--start", start.string(), "--json"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["iterations"] == 0);
}

TEST_CASE("flag errors exit 2") {
  CHECK(run_cli({"search", "--n", "6"}).code == 2);
  CHECK(run_cli({"search", "--n", "6", "--k", "5", "--fitness", "fancy"}).code == 2);
  CHECK(run_cli({"search", "--n", "6", "--k", "5", "--time-limit", "0"}).code == 2);
  CHECK(run_cli({"search", "--k", "5"}).code == 2);
  CHECK(run_cli({"search", "--n", "7", "--k", "5", "--composition", "3,1,1,1"}).code == 2);
  CHECK(run_cli({"tabu", "--n", "6", "--k", "5", "--stagnation", "0"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("worker count from the environment") {
  ::setenv(cli::kWorkersEnv, "abc", 1);
  CHECK(run_cli({"search", "--n", "4", "--k", "2", "--time-limit", "1", "--max-restarts", "1"}).code ==
        2);
  ::setenv(cli::kWorkersEnv, "2", 1);
  const Run r = run_cli({"search", "--n", "4", "--k", "4", "--time-limit", "30", "--json"});
  CHECK(Json::parse(r.out)["config"]["workers"] == 2);
  ::unsetenv(cli::kWorkersEnv);
  const Run one = run_cli({"search", "--n", "4", "--k", "4", "--time-limit", "30", "--json"});
  CHECK(Json::parse(one.out)["config"]["workers"] == 1);
}
