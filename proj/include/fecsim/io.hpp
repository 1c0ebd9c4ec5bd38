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

#pragma once

// Configuration documents and result serialization.
//
// A configuration is a JSON document:
//
//   {
//     "battery":  { "nominal_capacity_ah": 5.2, "soh": 1.0,
//                   "initial_soc": 0.95, "soc_min": 0.0, "soc_max": 1.0 },
//     "profile":  { "name": "inspection",
//                   "phases": [ { "name": "flight", "kind": "discharge",
//                                 "current_a": 9.5, "max_duration_min": 20 },
//                               ... ] },
//     "schedule": { "missions_per_day": 15, "days": 30,
//                   "inter_day_gap_min": 600 },
//     "scenarios": [ { "name": "ceiling", "overrides": { "flight": 8.0 } } ]
//   }
//
// soh, initial_soc, soc_min, soc_max, inter_day_gap_min and scenarios are
// optional. Unknown keys are rejected. Durations are minutes on disk and
// hours in memory.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fecsim/analysis.hpp"
#include "fecsim/engine.hpp"
#include "fecsim/mission.hpp"

namespace fecsim {

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { syntax, semantic, validation };

  // syntax: line/column are 1-based; semantic: path names the field.
  ConfigError(Kind kind, std::string message, std::string path = {},
              int line = 0, int column = 0);
  // validation: carries every issue found.
  explicit ConfigError(std::vector<Issue> issues);

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  Kind kind_;
  std::string path_;
  int line_ = 0;
  int column_ = 0;
  std::vector<Issue> issues_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct ParsedConfig {
  CampaignPlan plan;
  std::vector<Scenario> scenarios;

  const Scenario* find_scenario(std::string_view name) const;
};

// Syntax and schema only; domain invariants are left to validate().
ParsedConfig load_config(std::string_view text);

// load_config followed by validate(); throws ConfigError(validation) if any
// issue is found.
ParsedConfig parse_config(std::string_view text);

std::string serialize_config(const CampaignPlan& plan,
                             std::span<const Scenario> scenarios);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

enum class SeriesFormat { csv, json };
std::optional<SeriesFormat> parse_series_format(std::string_view text);

// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

// CSV header: t_hours,current_a,soc,fec,mode,day,mission
void write_timeseries(const TimeSeries& series, SeriesFormat format,
                      std::ostream& out);

std::string summary_json(const CampaignSummary& summary);
std::string comparison_json(const ComparisonReport& report,
                            const DegradationEstimate& degradation);
std::string comparison_text(const ComparisonReport& report,
                            const DegradationEstimate& degradation);

}  // namespace fecsim
