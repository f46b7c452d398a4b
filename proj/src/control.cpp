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

#include "tiltcage/control.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tiltcage/energy_opt.hpp"
#include "tiltcage/errors.hpp"

namespace tiltcage {
namespace {

// Splits a (thrust, torque) demand so that thrust is honored exactly and
// the differential torque is clipped to whatever remains realizable at that
// collective. Returns the speeds; `torque` is updated to the realized value.
RotorSpeeds allocate_thrust_priority(double thrust, double& torque,
                                     const RotorParams& rp,
                                     double air_density) {
  const double kt = rp.thrust_coeff * air_density;
  const double d = rp.disc_diameter;
  const double kq = rp.torque_coeff * air_density * d * d * d * d * d;
  const double max_sq = rp.max_rotor_speed * rp.max_rotor_speed;
  const double sum = std::clamp(thrust / kt, 0.0, 2.0 * max_sq);
  const double diff_lo = 2.0 * std::max(0.0, sum - max_sq) - sum;
  const double diff_hi = 2.0 * std::min(sum, max_sq) - sum;
  const double diff = std::clamp(torque / kq, diff_lo, diff_hi);
  torque = diff * kq;
  RotorSpeeds out;
  out.n1 = std::sqrt(0.5 * (sum + diff));
  out.n2 = std::sqrt(0.5 * (sum - diff));
  return out;
}

PidGains parse_gain_block(const nlohmann::json& j) {
  PidGains g;
  g.kp = j.value("kp", 0.0);
  g.ki = j.value("ki", 0.0);
  g.kd = j.value("kd", 0.0);
  g.integrator_limit = j.value("integrator_limit", 1e9);
  g.output_limit = j.value("output_limit", 1e9);
  if (g.integrator_limit <= 0.0 || g.output_limit <= 0.0)
    throw ValidationError("pid limits must be > 0");
  if (g.kp < 0.0 || g.ki < 0.0 || g.kd < 0.0)
    throw ValidationError("pid gains must be >= 0");
  return g;
}

}  // namespace

double pid_step(const PidGains& gains, PidState& state, double setpoint,
                double measurement, double dt,
                std::optional<double> setpoint_rate,
                std::optional<double> measurement_rate) {
  const double error = setpoint - measurement;

  double derivative = 0.0;
  if (gains.kd != 0.0) {
    if (measurement_rate.has_value()) {
      derivative = gains.kd * (setpoint_rate.value_or(0.0) - *measurement_rate);
    } else if (state.has_prev && dt > 0.0) {
      // Derivative on measurement: avoids the kick on setpoint steps.
      derivative = -gains.kd * (measurement - state.prev_measurement) / dt;
    }
  }

  double integral = std::clamp(state.integral + gains.ki * error * dt,
                               -gains.integrator_limit,
                               gains.integrator_limit);
  double output = gains.kp * error + integral + derivative;
  // Conditional integration: while saturated in the error's direction the
  // integrator holds its previous value.
  if (output > gains.output_limit && error > 0.0) integral = state.integral;
  if (output < -gains.output_limit && error < 0.0) integral = state.integral;
  output = std::clamp(gains.kp * error + integral + derivative,
                      -gains.output_limit, gains.output_limit);

  state.integral = integral;
  state.prev_measurement = measurement;
  state.has_prev = true;
  return output;
}

AerialController::AerialController(const AerialGains& gains,
                                   const VehicleParams& vehicle,
                                   const RotorParams& rotor,
                                   double air_density)
    : gains_(gains),
      vehicle_(vehicle),
      rotor_(rotor),
      air_density_(air_density) {}

ActuatorCommand AerialController::update(const VehicleState& est,
                                         const AerialReference& ref,
                                         double dt) {
  unreachable_ = false;

  Vec3 v_sp = ref.velocity;
  v_sp.x += pid_step(gains_.position, pos_[0], ref.position.x, est.position.x, dt);
  v_sp.y += pid_step(gains_.position, pos_[1], ref.position.y, est.position.y, dt);
  v_sp.z += pid_step(gains_.position, pos_[2], ref.position.z, est.position.z, dt);

  // Reference acceleration from successive velocity references; this is the
  // setpoint-rate term of the velocity loop.
  Vec3 a_ff;
  if (has_prev_ref_ && dt > 0.0) a_ff = (ref.velocity - prev_ref_velocity_) / dt;
  prev_ref_velocity_ = ref.velocity;
  has_prev_ref_ = true;

  Vec3 a_sp = a_ff;
  a_sp.x += pid_step(gains_.velocity, vel_[0], v_sp.x, est.velocity.x, dt);
  a_sp.y += pid_step(gains_.velocity, vel_[1], v_sp.y, est.velocity.y, dt);
  a_sp.z += pid_step(gains_.velocity, vel_[2], v_sp.z, est.velocity.z, dt);

  // Desired world force, rotated into the body and realized as (F, alpha,
  // beta) by inverting the thrust vector map.
  Vec3 f_des = (a_sp + Vec3{0.0, 0.0, vehicle_.gravity}) * vehicle_.total_mass;
  const Mat3 R = body_to_world(est.roll, est.pitch, est.yaw);
  Vec3 f_body = R.transpose_mul(f_des);
  double thrust = f_body.norm();
  if (thrust > vehicle_.F_max) {
    unreachable_ = true;
    f_body = f_body * (vehicle_.F_max / thrust);
    thrust = vehicle_.F_max;
  }
  double alpha = 0.0, beta = 0.0;
  if (thrust > 1e-9) {
    alpha = std::asin(std::clamp(-f_body.y / thrust, -1.0, 1.0));
    beta = std::atan2(f_body.x, f_body.z);
  }

  // Attitude loops output corrective moments, realized as small extra tilt
  // of the thrust vector about its arm l.
  const double u_roll = pid_step(gains_.attitude, att_roll_, 0.0, est.roll,
                                 dt, 0.0, est.roll_rate);
  const double u_pitch = pid_step(gains_.attitude, att_pitch_, 0.0, est.pitch,
                                  dt, 0.0, est.pitch_rate);
  const double arm = std::max(thrust * vehicle_.centroid_offset, 0.02);
  beta += u_roll / arm;
  alpha += -u_pitch / arm;

  const double yaw_error = wrap_angle(ref.yaw - est.yaw);
  const double u_yaw =
      pid_step(gains_.yaw, yaw_, yaw_error, 0.0, dt, 0.0, est.yaw_rate);
  double axis_gain = std::cos(alpha) * std::cos(beta);
  if (axis_gain < 0.5) axis_gain = 0.5;

  ActuatorCommand cmd;
  cmd.motor_roll = alpha;
  cmd.motor_pitch = beta;
  cmd.thrust = thrust;
  cmd.rotor_torque = u_yaw / axis_gain;
  cmd.body_tilt_cmd = 0.0;

  ClampedCommand clamped = clamp_command(cmd, vehicle_, rotor_, air_density_);
  double torque = clamped.cmd.rotor_torque;
  speeds_ = allocate_thrust_priority(clamped.cmd.thrust, torque, rotor_,
                                     air_density_);
  clamped.cmd.rotor_torque = torque;
  return clamped.cmd;
}

GroundSetpoint ground_transform(const VehicleState& s, const Vec3& look_ahead,
                                double tangent_bearing, double nominal_speed) {
  const double dx = look_ahead.x - s.position.x;
  const double dy = look_ahead.y - s.position.y;
  GroundSetpoint out;
  out.yaw = (std::hypot(dx, dy) < 1e-9) ? tangent_bearing : std::atan2(dy, dx);
  const double heading_error = wrap_angle(out.yaw - s.yaw);
  out.heading_speed = std::max(0.0, nominal_speed * std::cos(heading_error));
  return out;
}

GroundMode select_ground_mode(double a_des, double gamma,
                              const VehicleParams& p,
                              std::optional<GroundMode> previous) {
  if (gamma != 0.0) return GroundMode::kHighMobility;
  const double a_tilt = max_centroid_acceleration(p);
  const double mag = std::abs(a_des);
  if (previous.has_value() && *previous == GroundMode::kHighMobility) {
    // 10% hysteresis: drop back to energy saving only well inside the
    // tilt-only envelope.
    return mag < 0.9 * a_tilt ? GroundMode::kEnergySaving
                              : GroundMode::kHighMobility;
  }
  return mag <= a_tilt ? GroundMode::kEnergySaving
                       : GroundMode::kHighMobility;
}

EnergySavingController::EnergySavingController(const GroundGains& gains,
                                               const VehicleParams& vehicle,
                                               const RotorParams& rotor,
                                               double air_density)
    : gains_(gains),
      vehicle_(vehicle),
      rotor_(rotor),
      air_density_(air_density) {}

ActuatorCommand EnergySavingController::update(const VehicleState& est,
                                               const GroundSetpoint& sp,
                                               double dt) {
  const double v =
      est.velocity.x * std::cos(est.yaw) + est.velocity.y * std::sin(est.yaw);
  double pitch_sp =
      pid_step(gains_.es_speed, speed_, sp.heading_speed, v, dt);
  pitch_sp = std::clamp(pitch_sp, vehicle_.theta_min, vehicle_.theta_max);
  const double pitch_rate_cmd =
      pid_step(gains_.es_pitch, pitch_, pitch_sp, est.pitch, dt);
  tilt_cmd_ = std::clamp(tilt_cmd_ + pitch_rate_cmd * dt, vehicle_.theta_min,
                         vehicle_.theta_max);

  // Yaw with one rotor spinning: the torque comes at the minimum thrust.
  const double yaw_error = wrap_angle(sp.yaw - est.yaw);
  const double u_yaw =
      pid_step(gains_.yaw, yaw_, yaw_error, 0.0, dt, 0.0, est.yaw_rate);
  const double tau_max = rotor_.max_yaw_torque(air_density_);
  const double tau = std::clamp(u_yaw, -tau_max, tau_max);
  SpeedAllocation alloc =
      min_thrust_torque_allocation(tau, rotor_, air_density_);
  speeds_ = alloc.speeds;
  const ThrustTorque realized = rotor_forces(speeds_, rotor_, air_density_);

  ActuatorCommand cmd;
  cmd.motor_roll = 0.0;
  cmd.motor_pitch = -est.pitch;  // rotor plane stays parallel to the ground
  cmd.thrust = realized.thrust;
  cmd.rotor_torque = realized.rotor_torque;
  cmd.body_tilt_cmd = tilt_cmd_;
  return cmd;
}

HighMobilityController::HighMobilityController(const GroundGains& gains,
                                               const VehicleParams& vehicle,
                                               const RotorParams& rotor,
                                               double air_density)
    : gains_(gains),
      vehicle_(vehicle),
      rotor_(rotor),
      air_density_(air_density) {}

ActuatorCommand HighMobilityController::update(const VehicleState& est,
                                               const GroundSetpoint& sp,
                                               double gamma, double dt) {
  unreachable_ = false;
  const double cps = std::cos(est.yaw), sps = std::sin(est.yaw);
  const double v =
      (est.velocity.x * cps + est.velocity.y * sps) * std::cos(gamma) +
      est.velocity.z * std::sin(gamma);
  const double a_cmd =
      pid_step(gains_.speed, speed_, sp.heading_speed, v, dt);

  // Torque the thrust must supply about the contact point: demand plus
  // gravity and pendulum compensation on the slope.
  const double theta = est.pitch;
  const double mgl =
      vehicle_.tilt_mechanism_mass * vehicle_.gravity * vehicle_.centroid_offset;
  const double tau_req =
      vehicle_.J_yy / vehicle_.cage_radius * a_cmd +
      vehicle_.weight() * vehicle_.cage_radius * std::sin(gamma) -
      mgl * std::sin(theta - gamma);

  const double beta = tau_req >= 0.0 ? vehicle_.beta_max : vehicle_.beta_min;
  const double sbt = std::sin(beta - theta);
  double thrust = std::abs(sbt) > 1e-9
                      ? tau_req / (vehicle_.cage_radius * sbt)
                      : 0.0;
  if (thrust < 0.0) thrust = 0.0;
  if (thrust > vehicle_.F_max) {
    thrust = vehicle_.F_max;
    unreachable_ = true;
  }

  const double yaw_error = wrap_angle(sp.yaw - est.yaw);
  const double u_yaw =
      pid_step(gains_.yaw, yaw_, yaw_error, 0.0, dt, 0.0, est.yaw_rate);
  double tau_p = 0.0;
  if (gamma == 0.0) {
    // Differential yaw about the commanded collective; on a slope the
    // rotor differential is not used.
    double axis_gain = std::cos(beta + theta);
    if (std::abs(axis_gain) < 0.2) axis_gain = axis_gain < 0.0 ? -0.2 : 0.2;
    tau_p = u_yaw / axis_gain;
  }

  ActuatorCommand cmd;
  cmd.motor_roll = 0.0;
  cmd.motor_pitch = beta;
  cmd.thrust = thrust;
  cmd.rotor_torque = tau_p;
  cmd.body_tilt_cmd =
      gains_.tilt_vertical_in_slope_frame ? -gamma : 0.0;

  ClampedCommand clamped = clamp_command(cmd, vehicle_, rotor_, air_density_);
  double torque = clamped.cmd.rotor_torque;
  speeds_ = allocate_thrust_priority(clamped.cmd.thrust, torque, rotor_,
                                     air_density_);
  clamped.cmd.rotor_torque = torque;
  return clamped.cmd;
}

ControlConfig load_gains(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("gains parse failed: ") + e.what());
  }
  ControlConfig cfg;
  cfg.has_aerial = doc.contains("aerial");
  cfg.has_ground = doc.contains("ground");
  if (doc.contains("aerial")) {
    const auto& a = doc.at("aerial");
    if (a.contains("position")) cfg.aerial.position = parse_gain_block(a.at("position"));
    if (a.contains("velocity")) cfg.aerial.velocity = parse_gain_block(a.at("velocity"));
    if (a.contains("attitude")) cfg.aerial.attitude = parse_gain_block(a.at("attitude"));
    if (a.contains("yaw")) cfg.aerial.yaw = parse_gain_block(a.at("yaw"));
  }
  if (doc.contains("ground")) {
    const auto& g = doc.at("ground");
    if (g.contains("speed")) cfg.ground.speed = parse_gain_block(g.at("speed"));
    if (g.contains("yaw")) cfg.ground.yaw = parse_gain_block(g.at("yaw"));
    if (g.contains("es_speed")) cfg.ground.es_speed = parse_gain_block(g.at("es_speed"));
    if (g.contains("es_pitch")) cfg.ground.es_pitch = parse_gain_block(g.at("es_pitch"));
    cfg.ground.look_ahead = g.value("look_ahead", 0.5);
    cfg.ground.accel_horizon = g.value("accel_horizon", 1.0);
    cfg.ground.servo_gain = g.value("servo_gain", 20.0);
    cfg.ground.servo_rate_limit = g.value("servo_rate_limit", 2.0);
    std::string frame = g.value("tilt_reference", std::string("slope"));
    if (frame != "slope" && frame != "world")
      throw ValidationError("tilt_reference must be \"slope\" or \"world\"");
    cfg.ground.tilt_vertical_in_slope_frame = (frame == "slope");
  }
  return cfg;
}

ControlConfig load_gains_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open gains file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_gains(ss.str());
}

}  // namespace tiltcage
