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

// Campaign execution. Each phase is integrated in closed form; SOC targets
// on charge phases are hit by solving the linear SOC law for the crossing
// time, so no step-size error accumulates over a campaign.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fecsim/battery.hpp"
#include "fecsim/mission.hpp"

namespace fecsim {

enum class Termination { duration_cap, soc_target };

std::string_view to_string(Termination t);

struct PhaseOutcome {
  double current_a = 0.0;
  double actual_duration_h = 0.0;
  Termination terminated_by = Termination::duration_cap;
  BatteryState start_state;
  BatteryState end_state;
};

// A charge phase with a target stops at the analytic crossing time when
// that comes before max_duration; a phase that starts at or above its
// target takes zero time. FEC is booked once, at the end of the phase.
// Throws SocBoundError if the phase leaves the SOC bounds.
PhaseOutcome run_phase(const BatteryState& state, const Phase& phase,
                       const BatteryParams& params);

// One row of the sampled trajectory. current_a and mode describe the
// segment that led up to `clock_h`; the first row of a campaign is idle.
// mission is 0 on inter-day rest rows.
struct Sample {
  double clock_h = 0.0;
  double current_a = 0.0;
  double soc = 0.0;
  double fec = 0.0;
  Mode mode = Mode::idle;
  int day = 1;
  int mission = 1;
};

struct TimeSeries {
  std::vector<Sample> samples;
};

// SOC bound violation annotated with where in the campaign it happened.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const SocBoundError& cause, int day, int mission,
                  std::string phase_name);

  SocBoundError::Kind kind() const { return kind_; }
  double crossing_clock_h() const { return crossing_clock_h_; }
  int day() const { return day_; }
  int mission() const { return mission_; }
  const std::string& phase_name() const { return phase_name_; }

 private:
  SocBoundError::Kind kind_;
  double crossing_clock_h_;
  int day_;
  int mission_;
  std::string phase_name_;
};

struct CampaignRun {
  std::string scenario_name;
  TimeSeries series;
  BatteryState final_state;
  // One entry per slot of expand(plan), in the same order.
  std::vector<PhaseOutcome> outcomes;
};

// Runs the plan with the scenario's overrides. The series holds a sample at
// every phase boundary plus interior samples on the global grid
// k * sample_interval_h. Throws std::invalid_argument for an invalid plan,
// scenario or interval and SimulationError on a bound violation.
CampaignRun run_campaign(const CampaignPlan& plan, const Scenario& scenario,
                         double sample_interval_h);

// Constant-current segments actually executed (zero-length phases dropped).
std::vector<CurrentSegment> realized_segments(
    std::span<const PhaseOutcome> outcomes);

}  // namespace fecsim
