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

#include "fecsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace fecsim {

namespace {

// 1 - variant/baseline; a zero baseline only compares equal to zero.
double reduction(double baseline, double variant) {
  if (baseline != 0.0) return 1.0 - variant / baseline;
  return variant == 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
}

std::string percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

}  // namespace

CampaignSummary summarize(const TimeSeries& series,
                          std::span<const PhaseOutcome> outcomes,
                          const CampaignPlan& plan, std::string scenario_name) {
  const auto slots = expand(plan);
  if (slots.size() != outcomes.size()) {
    throw std::invalid_argument(
        "outcome count " + std::to_string(outcomes.size()) +
        " does not match the plan's " + std::to_string(slots.size()) + " slots");
  }
  if (series.samples.empty()) {
    throw std::invalid_argument("time series is empty");
  }
  const double end_clock =
      outcomes.empty() ? 0.0 : outcomes.back().end_state.clock_h;
  if (series.samples.front().soc != plan.initial_soc ||
      series.samples.back().clock_h != end_clock) {
    throw std::invalid_argument("time series does not belong to these outcomes");
  }

  CampaignSummary summary;
  summary.scenario_name = std::move(scenario_name);
  summary.days = plan.days;
  summary.missions_per_day = plan.missions_per_day;
  summary.min_soc_overall = plan.initial_soc;

  double charge_sum = 0.0;
  int charge_count = 0;

  std::size_t i = 0;
  while (i < slots.size()) {
    if (slots[i].is_rest()) {
      summary.min_soc_overall =
          std::min(summary.min_soc_overall, outcomes[i].end_state.soc);
      ++i;
      continue;
    }

    const std::size_t first = i;
    MissionStats stats;
    stats.day = slots[i].day;
    stats.mission = slots[i].mission;
    stats.start_soc = outcomes[first].start_state.soc;
    stats.min_soc = stats.start_soc;
    const double start_clock = outcomes[first].start_state.clock_h;

    for (; i < slots.size() && slots[i].day == stats.day &&
           slots[i].mission == stats.mission;
         ++i) {
      const PhaseOutcome& o = outcomes[i];
      // SOC is linear inside a phase, so the extremes sit on boundaries.
      stats.min_soc = std::min(stats.min_soc, o.end_state.soc);
      if (slots[i].phase.kind == Mode::discharge) {
        summary.total_flight_hours += o.actual_duration_h;
        summary.total_discharge_ah += std::abs(o.current_a) * o.actual_duration_h;
      }
      if (slots[i].phase.kind == Mode::charge) {
        summary.total_charge_ah += o.current_a * o.actual_duration_h;
        stats.charge_complete_min = (o.end_state.clock_h - start_clock) * 60.0;
      }
    }
    stats.depth_of_discharge = stats.start_soc - stats.min_soc;
    stats.delta_fec =
        outcomes[i - 1].end_state.fec - outcomes[first].start_state.fec;

    if (stats.charge_complete_min) {
      charge_sum += *stats.charge_complete_min;
      ++charge_count;
    }
    summary.min_soc_overall = std::min(summary.min_soc_overall, stats.min_soc);
    summary.per_mission.push_back(stats);
  }

  summary.total_fec = outcomes.empty() ? 0.0 : outcomes.back().end_state.fec;
  summary.fec_per_day = summary.total_fec / plan.days;
  summary.fec_per_mission = summary.total_fec / summary.mission_count();

  double dod_sum = 0.0;
  for (const auto& m : summary.per_mission) dod_sum += m.depth_of_discharge;
  summary.mean_dod =
      summary.per_mission.empty() ? 0.0 : dod_sum / summary.per_mission.size();
  if (charge_count > 0) summary.mean_charge_complete_min = charge_sum / charge_count;
  return summary;
}

CampaignSummary summarize(const CampaignRun& run, const CampaignPlan& plan) {
  return summarize(run.series, run.outcomes, plan, run.scenario_name);
}

ComparisonReport compare(const CampaignSummary& baseline,
                         const CampaignSummary& variant) {
  if (baseline.days != variant.days ||
      baseline.missions_per_day != variant.missions_per_day ||
      baseline.per_mission.size() != variant.per_mission.size()) {
    throw std::invalid_argument(
        "cannot compare campaigns with different day or mission counts");
  }

  ComparisonReport report;
  report.baseline = baseline;
  report.variant = variant;
  report.fec_reduction_fraction = reduction(baseline.total_fec, variant.total_fec);
  report.dod_reduction_fraction = reduction(baseline.mean_dod, variant.mean_dod);
  report.discharge_reduction_fraction =
      reduction(baseline.total_discharge_ah, variant.total_discharge_ah);
  auto two_decimals = [](double x) { return std::round(x * 100.0) / 100.0; };
  report.rounded_daily_fec_reduction =
      reduction(two_decimals(baseline.fec_per_day), two_decimals(variant.fec_per_day));
  report.whole_total_fec_reduction =
      reduction(std::floor(baseline.total_fec), std::floor(variant.total_fec));
  if (baseline.mean_charge_complete_min && variant.mean_charge_complete_min) {
    report.charge_time_saving_minutes =
        *baseline.mean_charge_complete_min - *variant.mean_charge_complete_min;
  }
  report.soh_note =
      "Cycling-driven SOH loss is proportional to FEC, so '" +
      variant.scenario_name + "' loses " +
      percent(report.fec_reduction_fraction) +
      " less SOH to cycling than '" + baseline.scenario_name + "'.";
  return report;
}

DegradationEstimate estimate_relative_degradation(const ComparisonReport& report,
                                                  std::optional<double> k_cycle) {
  if (k_cycle && !(*k_cycle >= 0.0)) {
    throw std::invalid_argument("aging coefficient k_cycle must be >= 0");
  }
  DegradationEstimate est;
  est.relative_factor = 1.0 - report.fec_reduction_fraction;
  est.reduction_percent = report.fec_reduction_fraction * 100.0;
  est.statement =
      "cycling degradation reduced by " + percent(report.fec_reduction_fraction);
  if (k_cycle) {
    est.k_cycle = k_cycle;
    est.baseline_delta_soh = *k_cycle * report.baseline.total_fec;
    est.variant_delta_soh = *k_cycle * report.variant.total_fec;
  }
  return est;
}

}  // namespace fecsim
