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

// Battery parameters, battery state, and the constant-current update laws:
// coulomb counting for state of charge and full-equivalent-cycle (FEC)
// counting for cycling stress.
//
// Units: hours, amperes, ampere-hours. Current is signed, positive while
// charging and negative while discharging.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fecsim {

enum class Mode { discharge, idle, charge };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

// >0 charge, <0 discharge, 0 idle.
Mode mode_of(double current_a);

struct BatteryParams {
  double nominal_capacity_ah = 1.0;
  double soh = 1.0;
  double soc_min = 0.0;
  double soc_max = 1.0;

  // Capacity actually available for coulomb counting (C_nom * SOH).
  double effective_capacity_ah() const { return nominal_capacity_ah * soh; }
};

// Human-readable invariant violations, empty when the parameters are usable.
std::vector<std::string> invariant_violations(const BatteryParams& params);

struct BatteryState {
  double clock_h = 0.0;
  double soc = 0.0;
  double fec = 0.0;
  Mode mode = Mode::idle;
};

struct CurrentSegment {
  double current_a = 0.0;
  double duration_h = 0.0;

  Mode mode() const { return mode_of(current_a); }
};

// Raised when a segment would push the SOC outside [soc_min, soc_max].
// crossing_clock_h is the absolute clock at which the bound is reached.
class SocBoundError : public std::runtime_error {
 public:
  enum class Kind { underflow, overflow };

  SocBoundError(Kind kind, double crossing_clock_h, double bound);

  Kind kind() const { return kind_; }
  double crossing_clock_h() const { return crossing_clock_h_; }
  double bound() const { return bound_; }

 private:
  Kind kind_;
  double crossing_clock_h_;
  double bound_;
};

// End-of-segment SOC values that overshoot a bound by no more than this
// are rounding noise and land on the bound itself.
inline constexpr double kSocRoundingSlack = 1e-12;

// |i| / C_nom. For a constant current the interval mean equals the
// instantaneous C-rate.
double mean_c_rate(const CurrentSegment& segment, const BatteryParams& params);

// 1/2 * C_r * duration.
double delta_fec(const CurrentSegment& segment, const BatteryParams& params);

// i * duration / (C_nom * SOH).
double delta_soc(const CurrentSegment& segment, const BatteryParams& params);

// Advances the state over one constant-current segment. SOC is linear in
// time inside the segment, so checking the end point covers every interior
// instant. Throws SocBoundError with the exact crossing time on violation
// and std::invalid_argument for a non-positive duration.
BatteryState apply_segment(const BatteryState& state,
                           const CurrentSegment& segment,
                           const BatteryParams& params);

// FEC = 1/(2 C_nom) * sum |i_k| d_k over the whole list. Throws
// std::invalid_argument on an empty list.
double fec_closed_form(std::span<const CurrentSegment> segments,
                       const BatteryParams& params);

}  // namespace fecsim
