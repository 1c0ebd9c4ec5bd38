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

#include "fecsim/cli.hpp"

#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "fecsim/analysis.hpp"
#include "fecsim/engine.hpp"
#include "fecsim/io.hpp"

namespace fecsim {

namespace {

namespace fs = std::filesystem;

constexpr double kSecondsPerHour = 3600.0;

// Thrown inside a command to leave with a given status.
struct Exit {
  int status;
};

void print_issues(const std::vector<Issue>& issues, std::ostream& os) {
  for (const auto& i : issues) os << i.location << ": " << i.message << "\n";
}

ParsedConfig load_or_exit(const std::string& path, std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    if (e.kind() == ConfigError::Kind::validation) {
      err << path << ": configuration is invalid\n";
      print_issues(e.issues(), err);
    } else {
      err << path << ": " << e.what() << "\n";
    }
    throw Exit{kExitValidation};
  }
}

const Scenario& scenario_or_exit(const ParsedConfig& cfg, const std::string& name,
                                 std::ostream& err) {
  if (const Scenario* s = cfg.find_scenario(name)) return *s;
  err << "error: unknown scenario '" << name << "'; available:";
  if (cfg.scenarios.empty()) err << " (none)";
  for (const auto& s : cfg.scenarios) err << " " << s.name;
  err << "\n";
  throw Exit{kExitUsage};
}

double interval_hours(double seconds, std::ostream& err) {
  if (!(seconds > 0.0)) {
    err << "error: --sample-interval-s must be positive\n";
    throw Exit{kExitUsage};
  }
  return seconds / kSecondsPerHour;
}

void prepare_dir(const std::string& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: " << dir << ": " << ec.message() << "\n";
    throw Exit{kExitUsage};
  }
}

template <typename Fn>
void write_or_exit(Fn&& fn, std::ostream& err) {
  try {
    fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
}

int cmd_validate(const std::string& config_path, std::ostream& out,
                 std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(config_path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  ParsedConfig cfg;
  try {
    cfg = load_config(text);
  } catch (const ConfigError& e) {
    err << config_path << ": " << e.what() << "\n";
    return kExitValidation;
  }
  const auto issues = validate(cfg.plan, cfg.scenarios);
  if (!issues.empty()) {
    print_issues(issues, out);
    out << issues.size() << " issue(s) found\n";
    return kExitValidation;
  }
  out << config_path << ": ok (" << cfg.plan.profile.phases.size()
      << " phase(s), " << cfg.plan.missions_per_day << " mission(s)/day, "
      << cfg.plan.days << " day(s), " << cfg.scenarios.size()
      << " scenario(s))\n";
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& scenario_name,
                 const std::string& out_dir, double interval_s,
                 const std::string& format_text, std::ostream& out,
                 std::ostream& err) {
  const auto format = parse_series_format(format_text);
  if (!format) {
    err << "error: unknown format '" << format_text << "' (csv, json)\n";
    return kExitUsage;
  }
  const double interval_h = interval_hours(interval_s, err);
  const ParsedConfig cfg = load_or_exit(config_path, err);
  const Scenario& scenario = scenario_or_exit(cfg, scenario_name, err);

  CampaignRun run;
  try {
    run = run_campaign(cfg.plan, scenario, interval_h);
  } catch (const SimulationError& e) {
    err << "simulation failed: " << e.what() << "\n";
    return kExitSimulation;
  }
  const CampaignSummary summary = summarize(run, cfg.plan);

  prepare_dir(out_dir, err);
  const fs::path dir(out_dir);
  const fs::path series_path =
      dir / (*format == SeriesFormat::csv ? "timeseries.csv" : "timeseries.json");
  write_or_exit(
      [&] {
        std::ostringstream buf;
        write_timeseries(run.series, *format, buf);
        write_text_file(series_path, buf.str());
        write_text_file(dir / "summary.json", summary_json(summary));
      },
      err);

  out << "scenario: " << summary.scenario_name << "\n"
      << "total_fec: " << format_double(summary.total_fec) << "\n"
      << "fec_per_day: " << format_double(summary.fec_per_day) << "\n"
      << "min_soc_overall: " << format_double(summary.min_soc_overall) << "\n"
      << "mean_dod: " << format_double(summary.mean_dod) << "\n"
      << "wrote " << series_path.string() << " (" << run.series.samples.size()
      << " samples) and " << (dir / "summary.json").string() << "\n";
  return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& baseline_name,
                const std::string& variant_name, const std::string& out_dir,
                double interval_s, std::optional<double> k_cycle,
                std::ostream& out, std::ostream& err) {
  if (k_cycle && !(*k_cycle >= 0.0)) {
    err << "error: --k-cycle must be >= 0\n";
    return kExitUsage;
  }
  const double interval_h = interval_hours(interval_s, err);
  const ParsedConfig cfg = load_or_exit(config_path, err);
  const Scenario& baseline = scenario_or_exit(cfg, baseline_name, err);
  const Scenario& variant = scenario_or_exit(cfg, variant_name, err);

  auto launch = [&](const Scenario& s) {
    return std::async(std::launch::async, [&cfg, &s, interval_h] {
      return summarize(run_campaign(cfg.plan, s, interval_h), cfg.plan);
    });
  };
  auto baseline_run = launch(baseline);
  auto variant_run = launch(variant);

  std::optional<CampaignSummary> b;
  std::optional<CampaignSummary> v;
  try {
    b = baseline_run.get();
  } catch (const SimulationError& e) {
    err << "simulation of '" << baseline.name << "' failed: " << e.what() << "\n";
  }
  try {
    v = variant_run.get();
  } catch (const SimulationError& e) {
    err << "simulation of '" << variant.name << "' failed: " << e.what() << "\n";
  }
  if (!b || !v) return kExitSimulation;

  const ComparisonReport report = compare(*b, *v);
  const DegradationEstimate degradation =
      estimate_relative_degradation(report, k_cycle);
  const std::string text = comparison_text(report, degradation);

  prepare_dir(out_dir, err);
  const fs::path dir(out_dir);
  write_or_exit(
      [&] {
        write_text_file(dir / "comparison.txt", text);
        write_text_file(dir / "comparison.json", comparison_json(report, degradation));
      },
      err);

  out << text;
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Battery cycling simulator for repeated charge/discharge missions",
               "fecsim"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario_name;
  std::string baseline_name;
  std::string variant_name;
  std::string out_dir;
  std::string format_text = "csv";
  double interval_s = 60.0;
  std::optional<double> k_cycle;

  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration");
  validate_cmd->add_option("config", config_path, "Configuration file")->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run one scenario and write its time series");
  simulate_cmd->add_option("config", config_path, "Configuration file")->required();
  simulate_cmd->add_option("--scenario", scenario_name, "Scenario name")->required();
  simulate_cmd->add_option("--out", out_dir, "Output directory")->required();
  simulate_cmd->add_option("--sample-interval-s", interval_s,
                           "Interior sampling interval in seconds")
      ->capture_default_str();
  simulate_cmd->add_option("--format", format_text, "Time series format: csv|json")
      ->capture_default_str();

  auto* compare_cmd =
      app.add_subcommand("compare", "Compare two scenarios of one campaign");
  compare_cmd->add_option("config", config_path, "Configuration file")->required();
  compare_cmd->add_option("--baseline", baseline_name, "Baseline scenario")->required();
  compare_cmd->add_option("--variant", variant_name, "Variant scenario")->required();
  compare_cmd->add_option("--out", out_dir, "Output directory")->required();
  compare_cmd->add_option("--sample-interval-s", interval_s,
                          "Interior sampling interval in seconds")
      ->capture_default_str();
  compare_cmd->add_option("--k-cycle", k_cycle,
                          "Cycle-aging coefficient (SOH loss per FEC)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("fecsim");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(config_path, out, err);
    if (simulate_cmd->parsed()) {
      return cmd_simulate(config_path, scenario_name, out_dir, interval_s,
                          format_text, out, err);
    }
    return cmd_compare(config_path, baseline_name, variant_name, out_dir,
                       interval_s, k_cycle, out, err);
  } catch (const Exit& e) {
    return e.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fecsim
