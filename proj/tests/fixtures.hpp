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

#include <filesystem>
#include <random>
#include <string>

#include "fecsim/mission.hpp"

namespace fecsim::testing {

// Inspection campaign: 20 min flight, 5 min rest, 2C charge back to 95%,
// 15 missions a day for 30 days on a 5.2 Ah pack.
inline CampaignPlan inspection_plan() {
  CampaignPlan plan;
  plan.battery.nominal_capacity_ah = 5.2;
  plan.initial_soc = 0.95;
  plan.profile.name = "inspection";
  plan.profile.phases = {
      {"flight", Mode::discharge, 9.5, 20.0 / 60.0, std::nullopt},
      {"rest", Mode::idle, 0.0, 5.0 / 60.0, std::nullopt},
      {"charge", Mode::charge, 10.4, 20.0 / 60.0, 0.95},
  };
  plan.missions_per_day = 15;
  plan.days = 30;
  return plan;
}

inline Scenario baseline_scenario() { return {"baseline", {}}; }
inline Scenario ceiling_scenario() { return {"ceiling", {{"flight", 8.0}}}; }

inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() /
             ("fecsim-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fecsim::testing
