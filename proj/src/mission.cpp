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

#include "fecsim/mission.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace fecsim {

double Phase::signed_current_a() const {
  switch (kind) {
    case Mode::charge:
      return current_magnitude_a;
    case Mode::discharge:
      return -current_magnitude_a;
    case Mode::idle:
      break;
  }
  return 0.0;
}

const Phase* MissionProfile::find(const std::string& phase_name) const {
  for (const auto& p : phases) {
    if (p.name == phase_name) return &p;
  }
  return nullptr;
}

namespace {

std::string phase_location(std::size_t index, const Phase& phase) {
  return "profile.phases[" + std::to_string(index) + "] (" + phase.name + ")";
}

// Empty string when the magnitude is acceptable for this kind of phase.
std::string magnitude_problem(Mode kind, double magnitude) {
  if (!std::isfinite(magnitude)) return "current must be finite";
  if (kind == Mode::idle) {
    return magnitude == 0.0 ? "" : "idle phase must draw 0 A";
  }
  return magnitude > 0.0 ? "" : "current magnitude must be > 0 A";
}

void check_phases(const CampaignPlan& plan, std::vector<Issue>& issues) {
  const auto& profile = plan.profile;
  if (profile.phases.empty()) {
    issues.push_back({"profile.phases", "profile needs at least one phase"});
    return;
  }

  std::set<std::string> seen;
  for (std::size_t i = 0; i < profile.phases.size(); ++i) {
    const Phase& phase = profile.phases[i];
    const std::string where = phase_location(i, phase);

    if (phase.name.empty()) {
      issues.push_back({where, "phase name must not be empty"});
    } else if (!seen.insert(phase.name).second) {
      issues.push_back({where, "duplicate phase name '" + phase.name + "'"});
    }

    if (auto p = magnitude_problem(phase.kind, phase.current_magnitude_a);
        !p.empty()) {
      issues.push_back({where, "phase '" + phase.name + "': " + p});
    }

    if (!(phase.max_duration_h > 0.0) || !std::isfinite(phase.max_duration_h)) {
      issues.push_back(
          {where, "phase '" + phase.name + "': max duration must be > 0"});
    }

    if (phase.target_soc) {
      const double target = *phase.target_soc;
      if (phase.kind != Mode::charge) {
        issues.push_back({where, "phase '" + phase.name +
                                     "': target_soc is only allowed on charge "
                                     "phases"});
      }
      if (!(target > 0.0 && target <= 1.0)) {
        issues.push_back(
            {where, "phase '" + phase.name + "': target_soc must lie in (0, 1]"});
      } else if (target > plan.battery.soc_max || target < plan.battery.soc_min) {
        issues.push_back({where, "phase '" + phase.name +
                                     "': target_soc outside the battery's SOC "
                                     "bounds"});
      }
    }
  }
}

}  // namespace

std::vector<Issue> validate(const CampaignPlan& plan,
                            std::span<const Scenario> scenarios) {
  std::vector<Issue> issues;

  for (auto& msg : invariant_violations(plan.battery)) {
    issues.push_back({"battery", std::move(msg)});
  }
  if (!(plan.initial_soc >= plan.battery.soc_min &&
        plan.initial_soc <= plan.battery.soc_max)) {
    issues.push_back(
        {"battery.initial_soc", "initial SOC outside the battery's SOC bounds"});
  }
  if (plan.missions_per_day < 1) {
    issues.push_back({"schedule.missions_per_day", "must be at least 1"});
  }
  if (plan.days < 1) {
    issues.push_back({"schedule.days", "must be at least 1"});
  }
  if (plan.inter_day_gap_h &&
      (!(*plan.inter_day_gap_h >= 0.0) || !std::isfinite(*plan.inter_day_gap_h))) {
    issues.push_back({"schedule.inter_day_gap", "gap must be >= 0"});
  }

  check_phases(plan, issues);

  std::set<std::string> names;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const Scenario& scenario = scenarios[s];
    const std::string where =
        "scenarios[" + std::to_string(s) + "] (" + scenario.name + ")";
    if (scenario.name.empty()) {
      issues.push_back({where, "scenario name must not be empty"});
    } else if (!names.insert(scenario.name).second) {
      issues.push_back({where, "duplicate scenario name '" + scenario.name + "'"});
    }
    for (const auto& [phase_name, magnitude] : scenario.overrides) {
      const Phase* phase = plan.profile.find(phase_name);
      if (phase == nullptr) {
        issues.push_back({where + ".overrides." + phase_name,
                          "override names unknown phase '" + phase_name + "'"});
        continue;
      }
      if (auto p = magnitude_problem(phase->kind, magnitude); !p.empty()) {
        issues.push_back({where + ".overrides." + phase_name,
                          "phase '" + phase_name + "': " + p});
      }
    }
  }
  return issues;
}

MissionProfile apply_scenario(const MissionProfile& profile,
                              const Scenario& scenario) {
  MissionProfile out = profile;
  for (const auto& [phase_name, magnitude] : scenario.overrides) {
    bool found = false;
    for (auto& phase : out.phases) {
      if (phase.name == phase_name) {
        phase.current_magnitude_a = magnitude;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("scenario '" + scenario.name +
                                  "' overrides unknown phase '" + phase_name +
                                  "'");
    }
  }
  return out;
}

std::vector<ExecutionSlot> expand(const CampaignPlan& plan) {
  std::vector<ExecutionSlot> slots;
  const auto per_day = static_cast<std::size_t>(plan.missions_per_day) *
                       plan.profile.phases.size();
  slots.reserve(per_day * static_cast<std::size_t>(plan.days) +
                static_cast<std::size_t>(plan.days));

  const bool rest_enabled = !plan.inter_day_gap_h || *plan.inter_day_gap_h > 0.0;

  for (int day = 1; day <= plan.days; ++day) {
    for (int mission = 1; mission <= plan.missions_per_day; ++mission) {
      for (std::size_t i = 0; i < plan.profile.phases.size(); ++i) {
        ExecutionSlot slot;
        slot.day = day;
        slot.mission = mission;
        slot.phase_index = static_cast<int>(i);
        slot.phase = plan.profile.phases[i];
        slots.push_back(std::move(slot));
      }
    }
    if (day < plan.days && rest_enabled) {
      ExecutionSlot rest;
      rest.day = day;
      rest.mission = 0;
      rest.phase.name = "inter-day rest";
      rest.phase.kind = Mode::idle;
      rest.phase.max_duration_h =
          plan.inter_day_gap_h ? *plan.inter_day_gap_h : kDayLengthHours;
      rest.fill_to_day_end = !plan.inter_day_gap_h;
      slots.push_back(std::move(rest));
    }
  }
  return slots;
}

}  // namespace fecsim
