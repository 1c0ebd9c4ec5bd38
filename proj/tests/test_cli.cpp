// Copyright 2026 The fecsim Authors. All rights reserved.
//
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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fecsim/cli.hpp"
#include "fecsim/io.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace fecsim;
namespace fs = std::filesystem;

namespace {

const std::string kConfig = std::string(FECSIM_CONFIG_DIR) + "/paper_baseline.json";

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fecsim");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_config(const fs::path& dir, const std::string& text) {
  const auto path = dir / "config.json";
  write_text_file(path, text);
  return path.string();
}

}  // namespace

TEST_CASE("cli validate") {
  const auto ok = cli({"validate", kConfig});
  CHECK(ok.status == kExitOk);
  CHECK(ok.out.find("ok") != std::string::npos);

  const auto dir = testing::scratch_dir("cli-validate");
  std::string text = read_text_file(kConfig);
  text.replace(text.find("\"current_a\": 0.0"), 16, "\"current_a\": 3.0");
  const auto bad = cli({"validate", write_config(dir, text)});
  CHECK(bad.status == kExitValidation);
  CHECK(bad.out.find("rest") != std::string::npos);

  const auto syntax = cli({"validate", write_config(dir, "{ nope")});
  CHECK(syntax.status == kExitValidation);
  CHECK(syntax.err.find("line 1") != std::string::npos);

  CHECK(cli({"validate", (dir / "missing.json").string()}).status == kExitUsage);
}

TEST_CASE("cli simulate") {
  const auto dir = testing::scratch_dir("cli-simulate");

  SUBCASE("csv output") {
    const auto r = cli({"simulate", kConfig, "--scenario", "ceiling", "--out",
                        dir.string(), "--sample-interval-s", "600"});
    REQUIRE(r.status == kExitOk);
    const auto csv = read_text_file(dir / "timeseries.csv");
    CHECK(csv.rfind("t_hours,current_a,soc,fec,mode,day,mission\n", 0) == 0);
    const auto summary = nlohmann::json::parse(read_text_file(dir / "summary.json"));
    CHECK(summary["scenario"] == "ceiling");
    CHECK(std::fabs(summary["fec_per_day"].get<double>() - 7.6923076923076925) < 1e-9);
  }
  SUBCASE("json output") {
    const auto r = cli({"simulate", kConfig, "--scenario", "baseline", "--out",
                        dir.string(), "--format", "json"});
    REQUIRE(r.status == kExitOk);
    const auto series = nlohmann::json::parse(read_text_file(dir / "timeseries.json"));
    CHECK(series.size() > 1000);
  }
  SUBCASE("unknown scenario lists the available ones") {
    const auto r = cli({"simulate", kConfig, "--scenario", "nope", "--out", dir.string()});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("baseline") != std::string::npos);
    CHECK(r.err.find("ceiling") != std::string::npos);
  }
  SUBCASE("SOC underflow is a runtime failure") {
    std::string text = read_text_file(kConfig);
    text.replace(text.find("\"flight\": 8.0"), 13, "\"flight\": 20.0");
    const auto r = cli({"simulate", write_config(dir, text), "--scenario", "ceiling",
                        "--out", dir.string()});
    CHECK(r.status == kExitSimulation);
    CHECK(r.err.find("underflow") != std::string::npos);
    CHECK(r.err.find("day 1, mission 1") != std::string::npos);
  }
  SUBCASE("usage errors") {
    CHECK(cli({"simulate", kConfig, "--out", dir.string()}).status == kExitUsage);
    CHECK(cli({"simulate", kConfig, "--scenario", "baseline", "--out", dir.string(),
               "--format", "xml"})
              .status == kExitUsage);
    CHECK(cli({"simulate", kConfig, "--scenario", "baseline", "--out", dir.string(),
               "--sample-interval-s", "0"})
              .status == kExitUsage);
    CHECK(cli({"frobnicate"}).status == kExitUsage);
    CHECK(cli({}).status == kExitUsage);
  }
  SUBCASE("output directory that cannot be created") {
    write_text_file(dir / "blocker", "x");
    const auto r = cli({"simulate", kConfig, "--scenario", "baseline", "--out",
                        (dir / "blocker" / "sub").string()});
    CHECK(r.status == kExitUsage);
  }
}

TEST_CASE("cli compare") {
  const auto dir = testing::scratch_dir("cli-compare");
  const auto r = cli({"compare", kConfig, "--baseline", "baseline", "--variant",
                      "ceiling", "--out", dir.string(), "--k-cycle", "1e-4"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.find("fec_reduction: 0.1578") != std::string::npos);
  CHECK(r.out.find("charge_time_saving_min: 2.88") != std::string::npos);

  const auto report = nlohmann::json::parse(read_text_file(dir / "comparison.json"));
  CHECK(std::fabs(report["fec_reduction"].get<double>() - (1.0 - 8.0 / 9.5)) < 1e-9);
  CHECK(std::fabs(report["charge_time_saving_min"].get<double>() - 2.8846153846153846) <
        1e-9);
  CHECK(report["dod_reduction"].is_number());
  CHECK(std::fabs(report["degradation"]["baseline_delta_soh"].get<double>() -
                  0.027403846153846154) < 1e-12);
  CHECK(read_text_file(dir / "comparison.txt") == r.out);

  CHECK(cli({"compare", kConfig, "--baseline", "baseline", "--variant", "nope",
             "--out", dir.string()})
            .status == kExitUsage);
  CHECK(cli({"compare", kConfig, "--baseline", "baseline", "--variant", "ceiling",
             "--out", dir.string(), "--k-cycle", "-1"})
            .status == kExitUsage);
}

TEST_CASE("cli help exits cleanly") {
  const auto r = cli({"--help"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("simulate") != std::string::npos);
}
