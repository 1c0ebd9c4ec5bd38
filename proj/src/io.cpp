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

#include "fecsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace fecsim {

using json = nlohmann::json;

ConfigError::ConfigError(Kind kind, std::string message, std::string path,
                         int line, int column)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out = std::to_string(issues.size()) + " validation issue(s)";
  for (const auto& i : issues) out += "\n  " + i.location + ": " + i.message;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<Issue> issues)
    : std::runtime_error(join_issues(issues)),
      kind_(Kind::validation),
      issues_(std::move(issues)) {}

IoError::IoError(const std::filesystem::path& path, const std::string& what)
    : std::runtime_error(path.string() + ": " + what), path_(path) {}

const Scenario* ParsedConfig::find_scenario(std::string_view name) const {
  for (const auto& s : scenarios) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

[[noreturn]] void semantic(const std::string& path, const std::string& what) {
  throw ConfigError(ConfigError::Kind::semantic, path + ": " + what, path);
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_object(const json& node, const std::string& path) {
  if (!node.is_object()) semantic(path, "expected an object");
}

void reject_unknown(const json& node, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) semantic(child(path, key), "unknown key");
  }
}

const json& require(const json& node, std::string_view key,
                    const std::string& path) {
  auto it = node.find(std::string(key));
  if (it == node.end()) semantic(child(path, key), "missing required key");
  return *it;
}

double as_number(const json& node, const std::string& path) {
  if (!node.is_number()) semantic(path, "expected a number");
  return node.get<double>();
}

int as_integer(const json& node, const std::string& path) {
  if (!node.is_number_integer()) semantic(path, "expected an integer");
  const auto v = node.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    semantic(path, "integer out of range");
  }
  return static_cast<int>(v);
}

std::string as_string(const json& node, const std::string& path) {
  if (!node.is_string()) semantic(path, "expected a string");
  return node.get<std::string>();
}

double optional_number(const json& node, std::string_view key,
                       const std::string& path, double fallback) {
  auto it = node.find(std::string(key));
  return it == node.end() ? fallback : as_number(*it, child(path, key));
}

constexpr double kMinutesPerHour = 60.0;

// Minute value whose conversion back to hours reproduces `hours` exactly.
double minutes_from_hours(double hours) {
  const double m = hours * kMinutesPerHour;
  if (m / kMinutesPerHour == hours) return m;
  double lo = m;
  double hi = m;
  for (int i = 0; i < 8; ++i) {
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    if (lo / kMinutesPerHour == hours) return lo;
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    if (hi / kMinutesPerHour == hours) return hi;
  }
  return m;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Phase read_phase(const json& node, const std::string& path) {
  require_object(node, path);
  reject_unknown(node, path,
                 {"name", "kind", "current_a", "max_duration_min", "target_soc"});
  Phase phase;
  phase.name = as_string(require(node, "name", path), child(path, "name"));
  const std::string kind_text =
      as_string(require(node, "kind", path), child(path, "kind"));
  auto kind = parse_mode(kind_text);
  if (!kind) {
    semantic(child(path, "kind"),
             "unknown kind '" + kind_text + "' (discharge, idle, charge)");
  }
  phase.kind = *kind;
  phase.current_magnitude_a =
      as_number(require(node, "current_a", path), child(path, "current_a"));
  phase.max_duration_h = as_number(require(node, "max_duration_min", path),
                                   child(path, "max_duration_min")) /
                         kMinutesPerHour;
  if (auto it = node.find("target_soc"); it != node.end()) {
    phase.target_soc = as_number(*it, child(path, "target_soc"));
  }
  return phase;
}

}  // namespace

ParsedConfig load_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ConfigError(ConfigError::Kind::syntax,
                      "syntax error at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + e.what(),
                      {}, line, column);
  }

  require_object(doc, "<root>");
  reject_unknown(doc, "", {"battery", "profile", "schedule", "scenarios"});

  ParsedConfig cfg;
  CampaignPlan& plan = cfg.plan;

  {
    const std::string path = "battery";
    const json& node = require(doc, path, "");
    require_object(node, path);
    reject_unknown(node, path,
                   {"nominal_capacity_ah", "soh", "initial_soc", "soc_min",
                    "soc_max"});
    plan.battery.nominal_capacity_ah =
        as_number(require(node, "nominal_capacity_ah", path),
                  child(path, "nominal_capacity_ah"));
    plan.battery.soh = optional_number(node, "soh", path, 1.0);
    plan.battery.soc_min = optional_number(node, "soc_min", path, 0.0);
    plan.battery.soc_max = optional_number(node, "soc_max", path, 1.0);
    plan.initial_soc = optional_number(node, "initial_soc", path, 0.95);
  }

  {
    const std::string path = "profile";
    const json& node = require(doc, path, "");
    require_object(node, path);
    reject_unknown(node, path, {"name", "phases"});
    plan.profile.name = as_string(require(node, "name", path), child(path, "name"));
    const json& phases = require(node, "phases", path);
    const std::string phases_path = child(path, "phases");
    if (!phases.is_array()) semantic(phases_path, "expected an array");
    for (std::size_t i = 0; i < phases.size(); ++i) {
      plan.profile.phases.push_back(
          read_phase(phases[i], phases_path + "[" + std::to_string(i) + "]"));
    }
  }

  {
    const std::string path = "schedule";
    const json& node = require(doc, path, "");
    require_object(node, path);
    reject_unknown(node, path, {"missions_per_day", "days", "inter_day_gap_min"});
    plan.missions_per_day = as_integer(require(node, "missions_per_day", path),
                                       child(path, "missions_per_day"));
    plan.days = as_integer(require(node, "days", path), child(path, "days"));
    if (auto it = node.find("inter_day_gap_min"); it != node.end()) {
      plan.inter_day_gap_h =
          as_number(*it, child(path, "inter_day_gap_min")) / kMinutesPerHour;
    }
  }

  if (auto it = doc.find("scenarios"); it != doc.end()) {
    const std::string path = "scenarios";
    if (!it->is_array()) semantic(path, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string spath = path + "[" + std::to_string(i) + "]";
      const json& node = (*it)[i];
      require_object(node, spath);
      reject_unknown(node, spath, {"name", "overrides"});
      Scenario scenario;
      scenario.name = as_string(require(node, "name", spath), child(spath, "name"));
      if (auto ov = node.find("overrides"); ov != node.end()) {
        const std::string opath = child(spath, "overrides");
        require_object(*ov, opath);
        for (const auto& [phase_name, value] : ov->items()) {
          scenario.overrides[phase_name] = as_number(value, child(opath, phase_name));
        }
      }
      cfg.scenarios.push_back(std::move(scenario));
    }
  }
  return cfg;
}

ParsedConfig parse_config(std::string_view text) {
  ParsedConfig cfg = load_config(text);
  if (auto issues = validate(cfg.plan, cfg.scenarios); !issues.empty()) {
    throw ConfigError(std::move(issues));
  }
  return cfg;
}

std::string serialize_config(const CampaignPlan& plan,
                             std::span<const Scenario> scenarios) {
  json doc = json::object();
  doc["battery"] = {{"nominal_capacity_ah", plan.battery.nominal_capacity_ah},
                    {"soh", plan.battery.soh},
                    {"initial_soc", plan.initial_soc},
                    {"soc_min", plan.battery.soc_min},
                    {"soc_max", plan.battery.soc_max}};

  json phases = json::array();
  for (const auto& p : plan.profile.phases) {
    json phase = {{"name", p.name},
                  {"kind", std::string(to_string(p.kind))},
                  {"current_a", p.current_magnitude_a},
                  {"max_duration_min", minutes_from_hours(p.max_duration_h)}};
    if (p.target_soc) phase["target_soc"] = *p.target_soc;
    phases.push_back(std::move(phase));
  }
  doc["profile"] = {{"name", plan.profile.name}, {"phases", std::move(phases)}};

  json schedule = {{"missions_per_day", plan.missions_per_day},
                   {"days", plan.days}};
  if (plan.inter_day_gap_h) {
    schedule["inter_day_gap_min"] = minutes_from_hours(*plan.inter_day_gap_h);
  }
  doc["schedule"] = std::move(schedule);

  json list = json::array();
  for (const auto& s : scenarios) {
    json overrides = json::object();
    for (const auto& [name, value] : s.overrides) overrides[name] = value;
    list.push_back({{"name", s.name}, {"overrides", std::move(overrides)}});
  }
  doc["scenarios"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

std::optional<SeriesFormat> parse_series_format(std::string_view text) {
  if (text == "csv") return SeriesFormat::csv;
  if (text == "json") return SeriesFormat::json;
  return std::nullopt;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_timeseries(const TimeSeries& series, SeriesFormat format,
                      std::ostream& out) {
  if (format == SeriesFormat::csv) {
    out << "t_hours,current_a,soc,fec,mode,day,mission\n";
    for (const auto& s : series.samples) {
      out << format_double(s.clock_h) << ',' << format_double(s.current_a) << ','
          << format_double(s.soc) << ',' << format_double(s.fec) << ','
          << to_string(s.mode) << ',' << s.day << ',' << s.mission << '\n';
    }
    return;
  }

  out << '[';
  bool first = true;
  for (const auto& s : series.samples) {
    json row = {{"t_hours", s.clock_h},
                {"current_a", s.current_a},
                {"soc", s.soc},
                {"fec", s.fec},
                {"mode", std::string(to_string(s.mode))},
                {"day", s.day},
                {"mission", s.mission}};
    out << (first ? "\n" : ",\n") << row.dump();
    first = false;
  }
  out << "\n]\n";
}

namespace {

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

// NaN has no JSON spelling; undefined ratios become null.
json ratio_json(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json summary_to_json(const CampaignSummary& s) {
  json missions = json::array();
  for (const auto& m : s.per_mission) {
    missions.push_back({{"day", m.day},
                        {"mission", m.mission},
                        {"start_soc", m.start_soc},
                        {"min_soc", m.min_soc},
                        {"depth_of_discharge", m.depth_of_discharge},
                        {"delta_fec", m.delta_fec},
                        {"charge_complete_min", optional_json(m.charge_complete_min)}});
  }
  return {{"scenario", s.scenario_name},
          {"days", s.days},
          {"missions_per_day", s.missions_per_day},
          {"total_fec", s.total_fec},
          {"fec_per_day", s.fec_per_day},
          {"fec_per_mission", s.fec_per_mission},
          {"min_soc_overall", s.min_soc_overall},
          {"mean_dod", s.mean_dod},
          {"total_flight_hours", s.total_flight_hours},
          {"total_discharge_ah", s.total_discharge_ah},
          {"total_charge_ah", s.total_charge_ah},
          {"mean_charge_complete_min", optional_json(s.mean_charge_complete_min)},
          {"per_mission", std::move(missions)}};
}

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string summary_json(const CampaignSummary& summary) {
  return summary_to_json(summary).dump(2) + "\n";
}

std::string comparison_json(const ComparisonReport& report,
                            const DegradationEstimate& degradation) {
  json deg = {{"statement", degradation.statement},
              {"relative_factor", degradation.relative_factor},
              {"reduction_percent", degradation.reduction_percent},
              {"k_cycle", optional_json(degradation.k_cycle)},
              {"baseline_delta_soh", optional_json(degradation.baseline_delta_soh)},
              {"variant_delta_soh", optional_json(degradation.variant_delta_soh)}};
  json doc = {{"baseline", summary_to_json(report.baseline)},
              {"variant", summary_to_json(report.variant)},
              {"fec_reduction", ratio_json(report.fec_reduction_fraction)},
              {"dod_reduction", ratio_json(report.dod_reduction_fraction)},
              {"discharge_reduction",
               ratio_json(report.discharge_reduction_fraction)},
              {"rounded_daily_fec_reduction",
               ratio_json(report.rounded_daily_fec_reduction)},
              {"whole_total_fec_reduction",
               ratio_json(report.whole_total_fec_reduction)},
              {"charge_time_saving_min",
               optional_json(report.charge_time_saving_minutes)},
              {"soh_note", report.soh_note},
              {"degradation", std::move(deg)}};
  return doc.dump(2) + "\n";
}

std::string comparison_text(const ComparisonReport& report,
                            const DegradationEstimate& degradation) {
  const auto& b = report.baseline;
  const auto& v = report.variant;
  std::ostringstream os;
  os << "comparison: " << b.scenario_name << " (baseline) vs " << v.scenario_name
     << " (variant)\n";
  os << "campaign: " << b.days << " day(s) x " << b.missions_per_day
     << " mission(s)\n\n";

  auto row = [&](const char* label, double bv, double vv, int digits) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-26s %14s %14s\n", label,
                  fixed(bv, digits).c_str(), fixed(vv, digits).c_str());
    os << buf;
  };
  char head[160];
  std::snprintf(head, sizeof head, "  %-26s %14s %14s\n", "", b.scenario_name.c_str(),
                v.scenario_name.c_str());
  os << head;
  row("total_fec", b.total_fec, v.total_fec, 4);
  row("fec_per_day", b.fec_per_day, v.fec_per_day, 4);
  row("fec_per_mission", b.fec_per_mission, v.fec_per_mission, 6);
  row("min_soc_overall", b.min_soc_overall, v.min_soc_overall, 6);
  row("mean_dod", b.mean_dod, v.mean_dod, 6);
  row("total_flight_hours", b.total_flight_hours, v.total_flight_hours, 4);
  row("total_discharge_ah", b.total_discharge_ah, v.total_discharge_ah, 4);
  row("mean_charge_complete_min",
      b.mean_charge_complete_min.value_or(std::nan("")),
      v.mean_charge_complete_min.value_or(std::nan("")), 4);

  os << "\nfec_reduction: " << format_double(report.fec_reduction_fraction)
     << " (" << fixed(report.fec_reduction_fraction * 100.0, 3) << "%)\n";
  os << "discharge_reduction: "
     << format_double(report.discharge_reduction_fraction)
     << " (1 - discharged Ah ratio; equals fec_reduction when charges refill "
        "to the same target)\n";
  os << "dod_reduction: " << format_double(report.dod_reduction_fraction) << "\n";
  os << "fec_reduction from FEC/day at 2 decimals: "
     << fixed(report.rounded_daily_fec_reduction * 100.0, 2) << "%\n";
  os << "fec_reduction from whole-cycle totals: "
     << fixed(report.whole_total_fec_reduction * 100.0, 2) << "%\n";
  os << "charge_time_saving_min: "
     << (report.charge_time_saving_minutes
             ? format_double(*report.charge_time_saving_minutes)
             : std::string("n/a"))
     << "\n\n";
  os << report.soh_note << "\n" << degradation.statement << "\n";
  if (degradation.k_cycle) {
    os << "absolute dSOH at k_cycle=" << format_double(*degradation.k_cycle)
       << ": " << b.scenario_name << "="
       << format_double(*degradation.baseline_delta_soh) << ", "
       << v.scenario_name << "=" << format_double(*degradation.variant_delta_soh)
       << "\n";
  }
  return os.str();
}

}  // namespace fecsim
