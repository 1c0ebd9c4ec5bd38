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

// Declarative mission model: phases grouped into a mission profile, a
// campaign plan repeating that profile over days, and named scenarios that
// swap phase currents. Everything here is plain data; validation reports
// problems as data instead of throwing.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fecsim/battery.hpp"

namespace fecsim {

inline constexpr double kDayLengthHours = 24.0;

struct Phase {
  std::string name;
  Mode kind = Mode::idle;
  double current_magnitude_a = 0.0;
  double max_duration_h = 0.0;
  // Charge phases only: stop early once this SOC is reached.
  std::optional<double> target_soc;

  // Magnitude with the sign implied by `kind`.
  double signed_current_a() const;

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct MissionProfile {
  std::string name;
  std::vector<Phase> phases;

  const Phase* find(const std::string& phase_name) const;

  friend bool operator==(const MissionProfile&, const MissionProfile&) = default;
};

struct CampaignPlan {
  BatteryParams battery;
  double initial_soc = 0.95;
  MissionProfile profile;
  int missions_per_day = 1;
  int days = 1;
  // Idle time between the last mission of a day and the first of the next.
  // Unset means "rest until the next 24 h day boundary".
  std::optional<double> inter_day_gap_h;
};

struct Scenario {
  std::string name;
  // phase name -> replacement current magnitude in amperes
  std::map<std::string, double> overrides;
};

struct Issue {
  std::string location;
  std::string message;
};

std::vector<Issue> validate(const CampaignPlan& plan,
                            std::span<const Scenario> scenarios);

// Copy of `profile` with overridden magnitudes. Throws std::invalid_argument
// if an override names a phase the profile does not have.
MissionProfile apply_scenario(const MissionProfile& profile,
                              const Scenario& scenario);

struct ExecutionSlot {
  int day = 1;           // 1-based
  int mission = 0;       // 1-based; 0 for the inter-day rest slot
  int phase_index = -1;  // position in the profile; -1 for the rest slot
  Phase phase;
  // Rest slot whose length is resolved at run time so the next day starts
  // on a kDayLengthHours boundary.
  bool fill_to_day_end = false;

  bool is_rest() const { return mission == 0; }
};

// Flattens the plan in (day, mission, phase) order with a rest slot between
// consecutive days. A fixed gap of zero produces no rest slot.
std::vector<ExecutionSlot> expand(const CampaignPlan& plan);

}  // namespace fecsim
