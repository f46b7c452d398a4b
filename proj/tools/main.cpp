// Copyright 2026 The tiltcage Authors
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
//
// tiltcage CLI: simulate | optimize | sweep | validate.
// Exit codes: 0 success, 1 config/usage error, 2 constraint halt or
// infeasible demand or failed validation, 3 numerical divergence.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiltcage/energy_opt.hpp"
#include "tiltcage/errors.hpp"
#include "tiltcage/simulation.hpp"
#include "tiltcage/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string config_dir() {
  if (const char* env = std::getenv("TILTCAGE_CONFIG_DIR")) return env;
  return "configs";
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_checksum(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(ss.str())));
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", std::gmtime(&tt));
  return buf;
}

json allocation_to_json(const tiltcage::AllocationResult& r) {
  json j;
  j["theta_deg"] = tiltcage::rad2deg(r.body_pitch);
  j["beta_deg"] = tiltcage::rad2deg(r.motor_pitch);
  j["thrust_N"] = r.thrust;
  j["P_motor_W"] = r.power.motor;
  j["P_servo_W"] = r.power.servo;
  j["P_total_W"] = r.power.total();
  j["stage"] = tiltcage::stage_name(r.stage);
  j["active_constraints"] = r.active_constraints;
  return j;
}

struct CommonPaths {
  std::string params_path;
  std::string gains_path;
  std::string sim_path;
  std::string out_dir = "runs";

  void resolve() {
    const std::string dir = config_dir();
    if (params_path.empty()) params_path = dir + "/default.json";
    if (gains_path.empty()) gains_path = dir + "/gains.json";
    if (sim_path.empty()) sim_path = dir + "/sim.json";
  }
};

int cmd_simulate(const CommonPaths& paths, const std::string& scenario_name,
                 std::int64_t seed_override, double duration_override) {
  tiltcage::ParamSet params = tiltcage::load_params_file(paths.params_path);
  tiltcage::ControlConfig control =
      tiltcage::load_gains_file(paths.gains_path);
  tiltcage::SimConfig cfg = tiltcage::load_sim_config_file(paths.sim_path);
  if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
  if (duration_override > 0.0) cfg.duration = duration_override;

  tiltcage::Scenario scenario = tiltcage::make_scenario(scenario_name);

  const fs::path run_dir =
      fs::path(paths.out_dir) /
      ("simulate-" + timestamp() + "-" + std::to_string(cfg.seed));
  fs::create_directories(run_dir);

  json manifest;
  manifest["command"] = "simulate";
  manifest["scenario"] = scenario_name;
  manifest["params_config"] = paths.params_path;
  manifest["gains_config"] = paths.gains_path;
  manifest["sim_config"] = paths.sim_path;
  manifest["seed"] = cfg.seed;
  manifest["timestamp_utc"] = timestamp();
  write_file(run_dir / "manifest.json", manifest.dump(2));

  tiltcage::SimResult result =
      tiltcage::simulate(scenario, control, params, cfg);

  write_file(run_dir / "telemetry.csv", result.telemetry.to_csv());
  write_file(run_dir / "summary.json", result.summary.to_json());
  manifest["artifacts"]["telemetry.csv"] =
      file_checksum(run_dir / "telemetry.csv");
  manifest["artifacts"]["summary.json"] =
      file_checksum(run_dir / "summary.json");
  write_file(run_dir / "manifest.json", manifest.dump(2));

  std::cout << "run directory: " << run_dir.string() << "\n"
            << result.summary.to_json() << "\n";
  return result.exit_code;
}

int cmd_optimize(const CommonPaths& paths, double accel, bool oracle,
                 const std::string& out_file) {
  tiltcage::ParamSet params = tiltcage::load_params_file(paths.params_path);
  try {
    const tiltcage::AllocationResult best =
        tiltcage::optimal_allocation(accel, params.vehicle);
    json j = allocation_to_json(best);
    j["a_des"] = accel;
    if (oracle) {
      const tiltcage::AllocationResult ref =
          tiltcage::brute_force_allocation(accel, params.vehicle);
      const double gap = std::abs(best.power.total() - ref.power.total()) /
                         std::max(ref.power.total(), 1e-9);
      j["oracle"] = allocation_to_json(ref);
      j["oracle_relative_gap"] = gap;
    }
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out_file.empty()) write_file(out_file, text);
    return 0;
  } catch (const tiltcage::InfeasibleError& e) {
    std::cerr << "infeasible demand; binding constraint: " << e.binding
              << "\n";
    return 2;
  }
}

int cmd_sweep(const CommonPaths& paths, double from, double to, int n,
              const std::string& out_file) {
  tiltcage::ParamSet params = tiltcage::load_params_file(paths.params_path);
  const tiltcage::SweepResult sweep =
      tiltcage::sweep_acceleration(from, to, n, params.vehicle);

  std::string csv =
      "a_des,theta_deg,beta_deg,F_N,P_total,P_motor,P_servo,stage,feasible\n";
  for (const tiltcage::SweepSample& s : sweep.samples) {
    char buf[256];
    if (s.feasible) {
      std::snprintf(buf, sizeof(buf),
                    "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s,1\n",
                    s.a_des, tiltcage::rad2deg(s.result.body_pitch),
                    tiltcage::rad2deg(s.result.motor_pitch), s.result.thrust,
                    s.result.power.total(), s.result.power.motor,
                    s.result.power.servo,
                    tiltcage::stage_name(s.result.stage));
    } else {
      std::snprintf(buf, sizeof(buf), "%.12g,,,,,,,,0\n", s.a_des);
    }
    csv += buf;
  }

  json summary;
  summary["from"] = from;
  summary["to"] = to;
  summary["n"] = n;
  summary["stage_boundaries"] = sweep.stage_boundaries;
  summary["tilt_only_limit"] =
      tiltcage::max_centroid_acceleration(params.vehicle);

  const std::string csv_path =
      out_file.empty() ? "sweep.csv" : out_file;
  write_file(csv_path, csv);
  const std::string summary_path =
      fs::path(csv_path).replace_extension(".json").string();
  write_file(summary_path, summary.dump(2));

  std::cout << "sweep written to " << csv_path << "\n"
            << summary.dump(2) << "\n";
  return 0;
}

int cmd_validate(const CommonPaths& paths) {
  tiltcage::ParamSet params = tiltcage::load_params_file(paths.params_path);
  tiltcage::ControlConfig control =
      tiltcage::load_gains_file(paths.gains_path);
  const auto checks = tiltcage::run_validation_suite(params, control);
  bool all_pass = true;
  for (const tiltcage::CheckResult& c : checks) {
    const char* tag = c.informational ? "NOTE" : (c.pass ? "PASS" : "FAIL");
    std::printf("[%s] %-55s %s\n", tag, c.name.c_str(), c.detail.c_str());
    if (!c.informational && !c.pass) all_pass = false;
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulation, control, and energy-optimal actuation for a "
               "caged coaxial tilt-rotor ground/air vehicle"};
  app.require_subcommand(1);

  CommonPaths paths;
  app.add_option("--params", paths.params_path, "vehicle parameter JSON");
  app.add_option("--gains", paths.gains_path, "controller gain JSON");
  app.add_option("--sim", paths.sim_path, "simulation config JSON");
  app.add_option("--out", paths.out_dir, "output directory for runs");

  auto* sim = app.add_subcommand("simulate", "run a closed-loop scenario");
  std::string scenario_name;
  std::int64_t seed_override = -1;
  double duration_override = 0.0;
  sim->add_option("--scenario", scenario_name,
                  "hover | flight-square | ground-course | planar-cruise | "
                  "custom:<path.json>")
      ->required();
  sim->add_option("--seed", seed_override, "override the config seed");
  sim->add_option("--duration", duration_override, "override run length [s]");

  auto* opt = app.add_subcommand("optimize",
                                 "energy-optimal actuation for one demand");
  double accel = 0.0;
  bool oracle = false;
  std::string opt_out;
  opt->add_option("--accel", accel, "desired acceleration [m/s^2]")
      ->required();
  opt->add_flag("--oracle", oracle, "cross-check against the grid oracle");
  opt->add_option("--json", opt_out, "also write the result to this file");

  auto* swp = app.add_subcommand("sweep", "acceleration sweep curves");
  double from = 0.001, to = 0.02;
  int n = 50;
  std::string sweep_out;
  swp->add_option("--from", from, "sweep start [m/s^2]");
  swp->add_option("--to", to, "sweep end [m/s^2]");
  swp->add_option("--n", n, "number of samples");
  swp->add_option("--csv", sweep_out, "output CSV path (default sweep.csv)");

  auto* val = app.add_subcommand("validate", "run the invariant suite");

  CLI11_PARSE(app, argc, argv);
  paths.resolve();

  try {
    if (sim->parsed())
      return cmd_simulate(paths, scenario_name, seed_override,
                          duration_override);
    if (opt->parsed()) {
      if (accel <= 0.0) {
        std::cerr << "--accel must be > 0\n";
        return 1;
      }
      return cmd_optimize(paths, accel, oracle, opt_out);
    }
    if (swp->parsed()) {
      if (!(0.0 < from && from < to) || n < 2) {
        std::cerr << "invalid sweep range: need 0 < --from < --to, --n >= 2\n";
        return 1;
      }
      return cmd_sweep(paths, from, to, n, sweep_out);
    }
    if (val->parsed()) return cmd_validate(paths);
  } catch (const tiltcage::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const tiltcage::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
