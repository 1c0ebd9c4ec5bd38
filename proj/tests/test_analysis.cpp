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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fecsim/analysis.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fecsim;
using fecsim::testing::inspection_plan;
using fecsim::testing::rel_err;

namespace {

CampaignSummary run_and_summarize(const CampaignPlan& plan, const Scenario& s,
                                  double interval_h = 60.0 / 3600.0) {
  return summarize(run_campaign(plan, s, interval_h), plan);
}

}  // namespace

TEST_CASE("summarize: inspection campaign") {
  const auto plan = inspection_plan();
  const auto base = run_and_summarize(plan, testing::baseline_scenario());
  const auto ceil = run_and_summarize(plan, testing::ceiling_scenario());

  CHECK(base.scenario_name == "baseline");
  CHECK(base.per_mission.size() == 450);
  CHECK(rel_err(base.fec_per_day, 9.134615384615385) < 1e-12);
  CHECK(rel_err(ceil.fec_per_day, 7.6923076923076925) < 1e-12);
  CHECK(rel_err(base.fec_per_mission, 0.6089743589743589) < 1e-12);
  CHECK(std::fabs(base.min_soc_overall - 0.34102564102564104) < 1e-14);
  CHECK(std::fabs(ceil.min_soc_overall - 0.4371794871794872) < 1e-14);
  CHECK(rel_err(base.mean_dod, 0.6089743589743589) < 1e-13);
  CHECK(rel_err(ceil.mean_dod, 0.5128205128205128) < 1e-13);
  CHECK(rel_err(base.total_flight_hours, 150.0) < 1e-13);
  CHECK(rel_err(base.total_discharge_ah, 1425.0) < 1e-13);
  REQUIRE(base.mean_charge_complete_min);
  CHECK(rel_err(*base.mean_charge_complete_min, 43.26923076923077) < 1e-12);
  CHECK(rel_err(*ceil.mean_charge_complete_min, 40.38461538461539) < 1e-12);

  // Constant profile: every mission is the same.
  for (const auto& m : base.per_mission) {
    CHECK(rel_err(m.delta_fec, base.fec_per_mission) < 1e-9);
    CHECK(rel_err(m.depth_of_discharge, base.mean_dod) < 1e-12);
    CHECK(m.depth_of_discharge >= 0.0);
    CHECK(m.depth_of_discharge <= 1.0);
  }
  CHECK(rel_err(base.total_fec, base.fec_per_mission * base.mission_count()) < 1e-9);
}

TEST_CASE("summarize: idle-only mission") {
  auto plan = inspection_plan();
  plan.days = 1;
  plan.missions_per_day = 1;
  plan.profile.phases = {{"wait", Mode::idle, 0.0, 0.5, {}}};
  const auto s = run_and_summarize(plan, {"idle", {}});
  REQUIRE(s.per_mission.size() == 1);
  CHECK(s.per_mission[0].depth_of_discharge == 0.0);
  CHECK(s.per_mission[0].delta_fec == 0.0);
  CHECK_FALSE(s.per_mission[0].charge_complete_min.has_value());
  CHECK_FALSE(s.mean_charge_complete_min.has_value());
}

TEST_CASE("summarize: mismatched inputs") {
  auto plan = inspection_plan();
  plan.days = 2;
  const auto run = run_campaign(plan, testing::baseline_scenario(), 0.1);

  auto other = plan;
  other.days = 3;
  CHECK_THROWS_AS(summarize(run, other), std::invalid_argument);

  TimeSeries truncated = run.series;
  truncated.samples.pop_back();
  CHECK_THROWS_AS(summarize(truncated, run.outcomes, plan), std::invalid_argument);
  CHECK_THROWS_AS(summarize(TimeSeries{}, run.outcomes, plan), std::invalid_argument);
}

TEST_CASE("summarize does not depend on the sample interval") {
  auto plan = inspection_plan();
  plan.days = 3;
  const auto a = run_and_summarize(plan, testing::ceiling_scenario(), 1.0 / 3600.0);
  const auto b = run_and_summarize(plan, testing::ceiling_scenario(), 2.5);
  CHECK(a.total_fec == b.total_fec);
  CHECK(a.mean_dod == b.mean_dod);
  CHECK(a.min_soc_overall == b.min_soc_overall);
  CHECK(*a.mean_charge_complete_min == *b.mean_charge_complete_min);
}

TEST_CASE("compare: inspection scenarios") {
  const auto plan = inspection_plan();
  const auto report = compare(run_and_summarize(plan, testing::baseline_scenario()),
                              run_and_summarize(plan, testing::ceiling_scenario()));
  // 1 - 8 / 9.5
  CHECK(std::fabs(report.fec_reduction_fraction - 0.15789473684210525) < 1e-9);
  CHECK(std::fabs(report.discharge_reduction_fraction - 0.15789473684210525) < 1e-12);
  // 1 - 0.5128205/0.6089744
  CHECK(std::fabs(report.dod_reduction_fraction - 0.15789473684210525) < 1e-12);
  REQUIRE(report.charge_time_saving_minutes);
  CHECK(std::fabs(*report.charge_time_saving_minutes - 2.8846153846153846) < 1e-9);
  CHECK(report.soh_note.find("15.79%") != std::string::npos);
  // 1 - 7.69 / 9.13 and 1 - 230 / 274
  CHECK(std::fabs(report.rounded_daily_fec_reduction - 0.15772179627601315) < 1e-12);
  CHECK(std::fabs(report.whole_total_fec_reduction - 0.16058394160583944) < 1e-12);
}

TEST_CASE("compare: identical and mismatched summaries") {
  auto plan = inspection_plan();
  plan.days = 2;
  const auto s = run_and_summarize(plan, testing::baseline_scenario());
  const auto same = compare(s, s);
  CHECK(same.fec_reduction_fraction == 0.0);
  CHECK(same.dod_reduction_fraction == 0.0);
  CHECK(*same.charge_time_saving_minutes == 0.0);

  auto longer = plan;
  longer.days = 3;
  CHECK_THROWS_AS(compare(s, run_and_summarize(longer, testing::baseline_scenario())),
                  std::invalid_argument);
}

TEST_CASE("fec reduction equals 1 - I_variant / I_baseline") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> amps(1.0, 14.0);
  auto plan = inspection_plan();
  plan.days = 2;
  plan.missions_per_day = 5;
  // Long enough cap that every charge reaches its target.
  plan.profile.phases[2].max_duration_h = 2.0;
  for (int trial = 0; trial < 25; ++trial) {
    const double ia = amps(rng);
    const double ib = amps(rng);
    const auto report =
        compare(run_and_summarize(plan, {"a", {{"flight", ia}}}),
                run_and_summarize(plan, {"b", {{"flight", ib}}}));
    CHECK(std::fabs(report.fec_reduction_fraction - (1.0 - ib / ia)) < 1e-12);
  }
}

TEST_CASE("estimate_relative_degradation") {
  const auto plan = inspection_plan();
  const auto report = compare(run_and_summarize(plan, testing::baseline_scenario()),
                              run_and_summarize(plan, testing::ceiling_scenario()));

  const auto relative = estimate_relative_degradation(report);
  CHECK(relative.statement == "cycling degradation reduced by 15.79%");
  CHECK(std::fabs(relative.relative_factor - 8.0 / 9.5) < 1e-9);
  CHECK_FALSE(relative.baseline_delta_soh.has_value());

  const auto zero = estimate_relative_degradation(report, 0.0);
  CHECK(*zero.baseline_delta_soh == 0.0);
  CHECK(*zero.variant_delta_soh == 0.0);

  const auto absolute = estimate_relative_degradation(report, 1e-4);
  // 1e-4 * 274.03846153846155
  CHECK(std::fabs(*absolute.baseline_delta_soh - 0.027403846153846154) < 1e-12);

  CHECK_THROWS_AS(estimate_relative_degradation(report, -1e-4), std::invalid_argument);
}
