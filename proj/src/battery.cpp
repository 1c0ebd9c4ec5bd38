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

#include "fecsim/battery.hpp"

#include <cmath>
#include <sstream>

namespace fecsim {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::discharge:
      return "discharge";
    case Mode::idle:
      return "idle";
    case Mode::charge:
      return "charge";
  }
  return "idle";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "discharge") return Mode::discharge;
  if (text == "idle") return Mode::idle;
  if (text == "charge") return Mode::charge;
  return std::nullopt;
}

Mode mode_of(double current_a) {
  if (current_a > 0.0) return Mode::charge;
  if (current_a < 0.0) return Mode::discharge;
  return Mode::idle;
}

std::vector<std::string> invariant_violations(const BatteryParams& params) {
  std::vector<std::string> out;
  if (!(params.nominal_capacity_ah > 0.0) ||
      !std::isfinite(params.nominal_capacity_ah)) {
    out.emplace_back("nominal capacity must be a positive number of Ah");
  }
  if (!(params.soh > 0.0 && params.soh <= 1.0)) {
    out.emplace_back("state of health must lie in (0, 1]");
  }
  if (!(params.soc_min >= 0.0 && params.soc_min < params.soc_max &&
        params.soc_max <= 1.0)) {
    out.emplace_back("SOC bounds must satisfy 0 <= soc_min < soc_max <= 1");
  }
  return out;
}

namespace {

std::string describe_crossing(SocBoundError::Kind kind, double clock,
                              double bound) {
  std::ostringstream os;
  os.precision(17);
  os << (kind == SocBoundError::Kind::underflow ? "SOC underflow"
                                                : "SOC overflow")
     << ": bound " << bound << " reached at t=" << clock << " h";
  return os.str();
}

}  // namespace

SocBoundError::SocBoundError(Kind kind, double crossing_clock_h, double bound)
    : std::runtime_error(describe_crossing(kind, crossing_clock_h, bound)),
      kind_(kind),
      crossing_clock_h_(crossing_clock_h),
      bound_(bound) {}

double mean_c_rate(const CurrentSegment& segment, const BatteryParams& params) {
  return std::abs(segment.current_a) / params.nominal_capacity_ah;
}

double delta_fec(const CurrentSegment& segment, const BatteryParams& params) {
  return 0.5 * mean_c_rate(segment, params) * segment.duration_h;
}

double delta_soc(const CurrentSegment& segment, const BatteryParams& params) {
  return segment.current_a * segment.duration_h /
         params.effective_capacity_ah();
}

BatteryState apply_segment(const BatteryState& state,
                           const CurrentSegment& segment,
                           const BatteryParams& params) {
  if (!(segment.duration_h > 0.0)) {
    throw std::invalid_argument("segment duration must be positive");
  }

  double soc = state.soc + delta_soc(segment, params);

  // Time from segment start until SOC hits `bound` at this current.
  auto crossing = [&](double bound) {
    return state.clock_h +
           (bound - state.soc) * params.effective_capacity_ah() /
               segment.current_a;
  };

  if (soc < params.soc_min) {
    if (soc < params.soc_min - kSocRoundingSlack) {
      throw SocBoundError(SocBoundError::Kind::underflow,
                          crossing(params.soc_min), params.soc_min);
    }
    soc = params.soc_min;
  } else if (soc > params.soc_max) {
    if (soc > params.soc_max + kSocRoundingSlack) {
      throw SocBoundError(SocBoundError::Kind::overflow,
                          crossing(params.soc_max), params.soc_max);
    }
    soc = params.soc_max;
  }

  BatteryState next;
  next.clock_h = state.clock_h + segment.duration_h;
  next.soc = soc;
  next.fec = state.fec + delta_fec(segment, params);
  next.mode = segment.mode();
  return next;
}

double fec_closed_form(std::span<const CurrentSegment> segments,
                       const BatteryParams& params) {
  if (segments.empty()) {
    throw std::invalid_argument("FEC of an empty segment list is undefined");
  }
  double throughput_ah = 0.0;
  for (const auto& s : segments) throughput_ah += std::abs(s.current_a) * s.duration_h;
  return throughput_ah / (2.0 * params.nominal_capacity_ah);
}

}  // namespace fecsim
