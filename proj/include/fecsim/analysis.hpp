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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fecsim/engine.hpp"
#include "fecsim/mission.hpp"

namespace fecsim {

struct MissionStats {
  int day = 1;
  int mission = 1;
  double start_soc = 0.0;
  double min_soc = 0.0;
  // start_soc - min_soc
  double depth_of_discharge = 0.0;
  double delta_fec = 0.0;
  // Minutes from mission start until the last charge phase of the mission
  // ended. Unset for missions without a charge phase.
  std::optional<double> charge_complete_min;
};

struct CampaignSummary {
  std::string scenario_name;
  int days = 0;
  int missions_per_day = 0;
  double total_fec = 0.0;
  double fec_per_day = 0.0;
  double fec_per_mission = 0.0;
  double min_soc_overall = 0.0;
  double mean_dod = 0.0;
  double total_flight_hours = 0.0;
  // Charge moved in each direction over the campaign.
  double total_discharge_ah = 0.0;
  double total_charge_ah = 0.0;
  std::optional<double> mean_charge_complete_min;
  std::vector<MissionStats> per_mission;

  int mission_count() const { return days * missions_per_day; }
};

// Per-mission statistics come from the phase boundaries in `outcomes`,
// which must be the run of `plan` (one outcome per expanded slot). The
// series is cross-checked against the outcomes. Throws
// std::invalid_argument on any mismatch.
CampaignSummary summarize(const TimeSeries& series,
                          std::span<const PhaseOutcome> outcomes,
                          const CampaignPlan& plan,
                          std::string scenario_name = {});

CampaignSummary summarize(const CampaignRun& run, const CampaignPlan& plan);

struct ComparisonReport {
  CampaignSummary baseline;
  CampaignSummary variant;
  // 1 - variant.total_fec / baseline.total_fec
  double fec_reduction_fraction = 0.0;
  // 1 - variant.mean_dod / baseline.mean_dod
  double dod_reduction_fraction = 0.0;
  // 1 - variant/baseline discharged Ah. When every charge phase refills to
  // the same target this equals fec_reduction_fraction, and for campaigns
  // that differ only in flight current it is 1 - I_variant / I_baseline.
  double discharge_reduction_fraction = 0.0;
  // The same reduction from figures as they would be quoted: FEC per day
  // rounded to two decimals, and total FEC truncated to whole cycles.
  double rounded_daily_fec_reduction = 0.0;
  double whole_total_fec_reduction = 0.0;
  // Baseline minus variant mean charge completion time, when both have one.
  std::optional<double> charge_time_saving_minutes;
  std::string soh_note;
};

// Throws std::invalid_argument when the two campaigns do not have the same
// days and missions per day.
ComparisonReport compare(const CampaignSummary& baseline,
                         const CampaignSummary& variant);

struct DegradationEstimate {
  // Variant cycling-driven SOH loss as a fraction of the baseline's.
  double relative_factor = 1.0;
  double reduction_percent = 0.0;
  std::optional<double> k_cycle;
  std::optional<double> baseline_delta_soh;
  std::optional<double> variant_delta_soh;
  std::string statement;
};

// SOH loss is taken as proportional to FEC. Without a coefficient only the
// relative claim is produced; with one, absolute dSOH = k_cycle * total_fec
// is reported per scenario. Throws std::invalid_argument for k_cycle < 0.
DegradationEstimate estimate_relative_degradation(
    const ComparisonReport& report, std::optional<double> k_cycle = {});

}  // namespace fecsim
