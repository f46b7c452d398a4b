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
// Fixed-step closed-loop simulation: RK4 integration of the mode dynamics,
// supervision of contact and friction constraints, a noisy position/yaw
// measurement model, and per-step telemetry.

#ifndef TILTCAGE_SIMULATION_HPP_
#define TILTCAGE_SIMULATION_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tiltcage/control.hpp"
#include "tiltcage/dynamics.hpp"
#include "tiltcage/energy_opt.hpp"
#include "tiltcage/scenarios.hpp"

namespace tiltcage {

enum class SlipPolicy { kHalt, kClampToMaxFriction, kWarnAndContinue };

SlipPolicy slip_policy_from_string(const std::string& s);
const char* slip_policy_name(SlipPolicy p);

struct MeasurementNoise {
  double position_sigma = 0.0;  // per-axis gaussian [m]
  double yaw_sigma = 0.0;       // [rad]
  double dropout_prob = 0.0;    // [0, 1]
  double rate = 250.0;          // [Hz]
};

struct SimConfig {
  double dt = 0.001;       // integration step [s]
  double duration = 0.0;   // 0 = use the scenario default
  SlipPolicy slip_policy = SlipPolicy::kClampToMaxFriction;
  MeasurementNoise noise;
  std::uint64_t seed = 1;
  double controller_rate = 250.0;  // [Hz]
};

// Deterministic generator: mt19937_64 with uniforms taken from the top 53
// bits and gaussians via Box-Muller, so the stream is reproducible from the
// seed on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct Measurement {
  Vec3 position;
  double yaw = 0.0;
};

// Additive-noise position/yaw observation; nullopt models a dropout, in
// which case the consumer holds its last estimate.
std::optional<Measurement> measure(const VehicleState& s,
                                   const MeasurementNoise& noise, Rng& rng);

enum class MotionMode { kAerial, kPlanarEnergySaving, kPlanarHighMobility,
                        kInclined };
const char* motion_mode_name(MotionMode m);

struct TelemetryRow {
  double t = 0.0;
  VehicleState state;
  ActuatorCommand cmd;
  RotorSpeeds speeds;
  MotionMode mode = MotionMode::kAerial;
  bool grounded = false;
  GroundForces forces;
  PowerBreakdown power;
  Vec3 reference;
  double reference_yaw = 0.0;
  Vec3 error;
};

struct Telemetry {
  std::vector<TelemetryRow> rows;

  static std::string csv_header();
  std::string to_csv() const;
};

struct RunSummary {
  bool completed = false;
  std::string halt_reason;  // empty on a clean run
  int steps = 0;
  double duration = 0.0;
  Vec3 rms_error;
  Vec3 max_abs_error;
  double max_overall_error = 0.0;
  double max_friction_ratio = 0.0;  // max |f| / (mu F_N) over grounded rows
  double energy_joules = 0.0;
  double progress = 0.0;     // arc length travelled along the path [m]
  double path_length = 0.0;
  int slip_steps = 0;

  std::string to_json() const;
};

struct SimResult {
  Telemetry telemetry;
  RunSummary summary;
  int exit_code = 0;  // 0 ok, 2 constraint halt, 3 divergence
};

struct Scenario {
  enum class Kind {
    kHover,
    kFlightSquare,
    kGroundCourse,
    kPlanarCruise,
    kCustomPath,  // aerial tracking of a user path
  };
  Kind kind = Kind::kHover;
  Path path;
  SlopeProfile slope;
  Vec3 hover_point{0.0, 0.0, 1.0};
  double default_duration = 10.0;
  std::optional<GroundMode> force_mode;  // pin the terrestrial mode

  bool aerial() const {
    return kind == Kind::kHover || kind == Kind::kFlightSquare ||
           kind == Kind::kCustomPath;
  }
};

// Builds a named scenario. Valid names: hover, flight-square,
// ground-course, planar-cruise, custom:<path.json>. Throws
// std::invalid_argument listing the valid names otherwise.
Scenario make_scenario(const std::string& name);

struct IncompatibleModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs a scenario closed-loop. Deterministic: identical inputs and seed
// produce byte-identical telemetry.
SimResult simulate(const Scenario& scenario, const ControlConfig& control,
                   const ParamSet& params, const SimConfig& config);

// JSON loader for SimConfig (keys: dt, duration, controller_rate,
// slip_policy, seed, noise{position_sigma, yaw_sigma, dropout_prob, rate}).
SimConfig load_sim_config(const std::string& text);
SimConfig load_sim_config_file(const std::string& path);

}  // namespace tiltcage

#endif  // TILTCAGE_SIMULATION_HPP_
