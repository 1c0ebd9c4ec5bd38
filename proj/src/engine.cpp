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

#include "fecsim/engine.hpp"

#include <cmath>
#include <sstream>

namespace fecsim {

std::string_view to_string(Termination t) {
  return t == Termination::soc_target ? "soc_target" : "duration_cap";
}

namespace {

std::string annotate(const SocBoundError& cause, int day, int mission,
                     const std::string& phase) {
  std::ostringstream os;
  os << "day " << day << ", ";
  if (mission == 0) {
    os << "inter-day rest";
  } else {
    os << "mission " << mission << ", phase '" << phase << "'";
  }
  os << ": " << cause.what();
  return os.str();
}

PhaseOutcome zero_length(const BatteryState& state, double current,
                         Termination why) {
  PhaseOutcome out;
  out.current_a = current;
  out.actual_duration_h = 0.0;
  out.terminated_by = why;
  out.start_state = state;
  out.end_state = state;
  return out;
}

}  // namespace

SimulationError::SimulationError(const SocBoundError& cause, int day,
                                 int mission, std::string phase_name)
    : std::runtime_error(annotate(cause, day, mission, phase_name)),
      kind_(cause.kind()),
      crossing_clock_h_(cause.crossing_clock_h()),
      day_(day),
      mission_(mission),
      phase_name_(std::move(phase_name)) {}

PhaseOutcome run_phase(const BatteryState& state, const Phase& phase,
                       const BatteryParams& params) {
  const double current = phase.signed_current_a();

  if (phase.kind == Mode::charge && phase.target_soc) {
    const double target = *phase.target_soc;
    if (state.soc >= target) {
      return zero_length(state, current, Termination::soc_target);
    }
    const double time_to_target =
        (target - state.soc) * params.effective_capacity_ah() / current;
    if (time_to_target <= phase.max_duration_h) {
      const CurrentSegment segment{current, time_to_target};
      PhaseOutcome out;
      out.current_a = current;
      out.actual_duration_h = time_to_target;
      out.terminated_by = Termination::soc_target;
      out.start_state = state;
      out.end_state.clock_h = state.clock_h + time_to_target;
      out.end_state.soc = target;
      out.end_state.fec = state.fec + delta_fec(segment, params);
      out.end_state.mode = Mode::charge;
      return out;
    }
  }

  const CurrentSegment segment{current, phase.max_duration_h};
  PhaseOutcome out;
  out.current_a = current;
  out.actual_duration_h = phase.max_duration_h;
  out.terminated_by = Termination::duration_cap;
  out.start_state = state;
  out.end_state = apply_segment(state, segment, params);
  return out;
}

CampaignRun run_campaign(const CampaignPlan& plan, const Scenario& scenario,
                         double sample_interval_h) {
  if (!(sample_interval_h > 0.0) || !std::isfinite(sample_interval_h)) {
    throw std::invalid_argument("sample interval must be positive");
  }
  const Scenario scenarios[] = {scenario};
  if (auto issues = validate(plan, scenarios); !issues.empty()) {
    throw std::invalid_argument("invalid campaign: " + issues.front().location +
                                ": " + issues.front().message);
  }

  CampaignPlan effective = plan;
  effective.profile = apply_scenario(plan.profile, scenario);
  const auto slots = expand(effective);
  const BatteryParams& params = plan.battery;

  CampaignRun run;
  run.scenario_name = scenario.name;
  run.outcomes.reserve(slots.size());

  BatteryState state;
  state.soc = plan.initial_soc;

  auto& samples = run.series.samples;
  samples.push_back({state.clock_h, 0.0, state.soc, state.fec, Mode::idle,
                     slots.empty() ? 1 : slots.front().day,
                     slots.empty() ? 1 : slots.front().mission});

  for (const auto& slot : slots) {
    Phase phase = slot.phase;
    PhaseOutcome outcome;
    if (slot.fill_to_day_end) {
      const double remaining = slot.day * kDayLengthHours - state.clock_h;
      if (remaining > 0.0) {
        phase.max_duration_h = remaining;
        outcome = run_phase(state, phase, params);
      } else {
        outcome = zero_length(state, 0.0, Termination::duration_cap);
      }
    } else {
      try {
        outcome = run_phase(state, phase, params);
      } catch (const SocBoundError& e) {
        throw SimulationError(e, slot.day, slot.mission, phase.name);
      }
    }

    if (outcome.actual_duration_h > 0.0) {
      const double t0 = outcome.start_state.clock_h;
      const double t1 = outcome.end_state.clock_h;
      const double current = outcome.current_a;
      const Mode mode = mode_of(current);
      const double soc_rate = current / params.effective_capacity_ah();
      const double fec_rate = 0.5 * std::abs(current) / params.nominal_capacity_ah;

      for (auto k = static_cast<long long>(std::floor(t0 / sample_interval_h)) + 1;;
           ++k) {
        const double t = static_cast<double>(k) * sample_interval_h;
        if (t >= t1) break;
        if (t <= t0) continue;
        const double dt = t - t0;
        samples.push_back({t, current, outcome.start_state.soc + soc_rate * dt,
                           outcome.start_state.fec + fec_rate * dt, mode,
                           slot.day, slot.mission});
      }
      samples.push_back({t1, current, outcome.end_state.soc,
                         outcome.end_state.fec, mode, slot.day, slot.mission});
    }

    state = outcome.end_state;
    run.outcomes.push_back(outcome);
  }

  run.final_state = state;
  return run;
}

std::vector<CurrentSegment> realized_segments(
    std::span<const PhaseOutcome> outcomes) {
  std::vector<CurrentSegment> out;
  out.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    if (o.actual_duration_h > 0.0) out.push_back({o.current_a, o.actual_duration_h});
  }
  return out;
}

}  // namespace fecsim
