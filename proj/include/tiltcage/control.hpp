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
// Controller stack: a shared PID primitive, the aerial cascade (position ->
// velocity -> thrust-vector decomposition, with attitude and yaw loops), the
// two terrestrial controllers, the path-to-setpoint ground transform, and
// ground-mode selection.

#ifndef TILTCAGE_CONTROL_HPP_
#define TILTCAGE_CONTROL_HPP_

#include <optional>
#include <string>

#include "tiltcage/actuation.hpp"
#include "tiltcage/dynamics.hpp"
#include "tiltcage/math.hpp"
#include "tiltcage/params.hpp"

namespace tiltcage {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double integrator_limit = 1e9;
  double output_limit = 1e9;
};

struct PidState {
  double integral = 0.0;
  double prev_measurement = 0.0;
  bool has_prev = false;
};

// One PID update. The derivative term uses the supplied rates when
// available and falls back to differentiating the measurement. The
// integrator is clamped and stops accumulating while the output is
// saturated in the error's direction.
double pid_step(const PidGains& gains, PidState& state, double setpoint,
                double measurement, double dt,
                std::optional<double> setpoint_rate = std::nullopt,
                std::optional<double> measurement_rate = std::nullopt);

struct AerialReference {
  Vec3 position;
  Vec3 velocity;
  double yaw = 0.0;
};

struct AerialGains {
  PidGains position;  // position error -> velocity setpoint [m/s per m]
  PidGains velocity;  // velocity error -> acceleration [m/s^2 per m/s]
  PidGains attitude;  // roll/pitch error -> corrective moment [N m]
  PidGains yaw;       // yaw error -> rotor torque demand [N m]
};

// Cascade controller for free flight. Stateful; one instance per run.
class AerialController {
 public:
  AerialController(const AerialGains& gains, const VehicleParams& vehicle,
                   const RotorParams& rotor, double air_density);

  // Computes one clamped command from the current estimate and reference.
  // dt is the controller period.
  ActuatorCommand update(const VehicleState& estimate,
                         const AerialReference& reference, double dt);

  // Set when the demanded force vector exceeded F_max and was scaled back.
  bool unreachable_setpoint() const { return unreachable_; }
  RotorSpeeds rotor_speeds() const { return speeds_; }

 private:
  AerialGains gains_;
  VehicleParams vehicle_;
  RotorParams rotor_;
  double air_density_;
  PidState pos_[3], vel_[3], att_roll_, att_pitch_, yaw_;
  Vec3 prev_ref_velocity_;
  bool has_prev_ref_ = false;
  bool unreachable_ = false;
  RotorSpeeds speeds_;
};

// Heading-frame setpoint produced from an upper-level path reference.
struct GroundSetpoint {
  double heading_speed = 0.0;  // v_e [m/s]
  double yaw = 0.0;            // psi_e [rad]
};

enum class GroundMode { kEnergySaving, kHighMobility };

// Decomposes a look-ahead path point into a non-holonomic setpoint: yaw
// toward the point, speed scaled by the cosine of the heading error and
// floored at zero. `tangent_bearing` breaks the degenerate case where the
// look-ahead point coincides with the vehicle.
GroundSetpoint ground_transform(const VehicleState& s, const Vec3& look_ahead,
                                double tangent_bearing, double nominal_speed);

// Picks the terrestrial mode. Any slope forces high mobility; on flat
// ground the demanded acceleration is compared against the tilt-only
// envelope with a 10% hysteresis band (drop back below 0.9x).
GroundMode select_ground_mode(double a_des, double gamma,
                              const VehicleParams& p,
                              std::optional<GroundMode> previous = std::nullopt);

struct GroundGains {
  PidGains speed;     // high mobility: speed error -> along-slope accel
  PidGains yaw;       // yaw error -> rotor torque demand [N m]
  PidGains es_speed;  // energy saving: speed error -> pitch setpoint [rad]
  PidGains es_pitch;  // energy saving: pitch error -> pitch rate [rad/s]
  double look_ahead = 0.5;       // pursuit distance [m]
  double accel_horizon = 1.0;    // seconds to close a speed error
  double servo_gain = 20.0;      // tilt servo tracking gain [1/s]
  double servo_rate_limit = 2.0; // tilt servo slew limit [rad/s]
  bool tilt_vertical_in_slope_frame = true;  // high-mobility tilt reference
};

// Flat-ground controller that drives through centroid tilt only: the rotor
// plane is held parallel to the ground (beta = -theta) and yaw uses a
// single spinning rotor.
class EnergySavingController {
 public:
  EnergySavingController(const GroundGains& gains, const VehicleParams& vehicle,
                         const RotorParams& rotor, double air_density);

  ActuatorCommand update(const VehicleState& estimate,
                         const GroundSetpoint& sp, double dt);

  RotorSpeeds rotor_speeds() const { return speeds_; }
  void seed_tilt(double theta) { tilt_cmd_ = theta; }

 private:
  GroundGains gains_;
  VehicleParams vehicle_;
  RotorParams rotor_;
  double air_density_;
  PidState speed_, pitch_, yaw_;
  double tilt_cmd_ = 0.0;
  RotorSpeeds speeds_;
};

// Thrust-driven ground controller: motor pitch pinned at +/-beta_max, the
// tilt mechanism regulated upright, yaw through differential speeds about
// the commanded collective.
class HighMobilityController {
 public:
  HighMobilityController(const GroundGains& gains,
                         const VehicleParams& vehicle,
                         const RotorParams& rotor, double air_density);

  // gamma is the local surface inclination along the heading.
  ActuatorCommand update(const VehicleState& estimate,
                         const GroundSetpoint& sp, double gamma, double dt);

  bool unreachable_setpoint() const { return unreachable_; }
  RotorSpeeds rotor_speeds() const { return speeds_; }

 private:
  GroundGains gains_;
  VehicleParams vehicle_;
  RotorParams rotor_;
  double air_density_;
  PidState speed_, yaw_;
  bool unreachable_ = false;
  RotorSpeeds speeds_;
};

struct ControlConfig {
  AerialGains aerial;
  GroundGains ground;
  // Whether the source document provided the block; scenarios refuse to
  // run against a missing one.
  bool has_aerial = true;
  bool has_ground = true;
};

// Loads the per-loop gain blocks from a JSON document / file.
ControlConfig load_gains(const std::string& text);
ControlConfig load_gains_file(const std::string& path);

}  // namespace tiltcage

#endif  // TILTCAGE_CONTROL_HPP_
