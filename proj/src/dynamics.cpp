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

#include "tiltcage/dynamics.hpp"

#include <cmath>

namespace tiltcage {

std::array<double, 12> VehicleState::to_array() const {
  return {position.x, position.y, position.z, velocity.x, velocity.y,
          velocity.z, roll,       pitch,      yaw,        roll_rate,
          pitch_rate, yaw_rate};
}

VehicleState VehicleState::from_array(const std::array<double, 12>& a) {
  VehicleState s;
  s.position = {a[0], a[1], a[2]};
  s.velocity = {a[3], a[4], a[5]};
  s.roll = a[6];
  s.pitch = a[7];
  s.yaw = a[8];
  s.roll_rate = a[9];
  s.pitch_rate = a[10];
  s.yaw_rate = a[11];
  return s;
}

void VehicleState::wrap_attitude() {
  roll = wrap_angle(roll);
  pitch = wrap_angle(pitch);
  yaw = wrap_angle(yaw);
}

Mat3 body_to_world(double roll, double pitch, double yaw) {
  const double cph = std::cos(roll), sph = std::sin(roll);
  const double cth = std::cos(pitch), sth = std::sin(pitch);
  const double cps = std::cos(yaw), sps = std::sin(yaw);
  // R = Rz(yaw) * Ry(pitch) * Rx(roll)
  Mat3 R;
  R.m = {cps * cth, cps * sth * sph - sps * cph, cps * sth * cph + sps * sph,
         sps * cth, sps * sth * sph + cps * cph, sps * sth * cph - cps * sph,
         -sth,      cth * sph,                   cth * cph};
  return R;
}

Vec3 drag_force(const Vec3& velocity, const DragParams& d) {
  const double speed = velocity.norm();
  if (speed == 0.0) return {};
  const double magnitude = 0.5 * d.drag_coefficient * d.air_density * speed *
                           speed * d.frontal_area;
  return velocity * (-magnitude / speed);
}

Vec3 drag_torque(const Vec3& w, const DragParams& d) {
  return {-d.k_tau_x * w.x * std::abs(w.x), -d.k_tau_y * w.y * std::abs(w.y),
          -d.k_tau_z * w.z * std::abs(w.z)};
}

DerivativeResult aerial_derivative(const VehicleState& s,
                                   const ActuatorCommand& c,
                                   const VehicleParams& p,
                                   const DragParams& d) {
  DerivativeResult out;
  if (std::abs(s.pitch) >= kSingularPitch) {
    out.status = DynamicsStatus::kSingularAttitude;
    return out;
  }

  const double M = p.total_mass;
  const Mat3 R = body_to_world(s.roll, s.pitch, s.yaw);
  const Vec3 thrust_body =
      thrust_vector_body(c.thrust, c.motor_roll, c.motor_pitch);
  const Vec3 thrust_world = R * thrust_body;
  const Vec3 gravity{0.0, 0.0, -M * p.gravity};
  const Vec3 drag = drag_force(s.velocity, d);

  VehicleState& dot = out.derivative;
  dot.position = s.velocity;
  dot.velocity = (thrust_world + gravity + drag) / M;

  dot.roll = s.roll_rate;
  dot.pitch = s.pitch_rate;
  dot.yaw = s.yaw_rate;

  const double ca = std::cos(c.motor_roll), sa = std::sin(c.motor_roll);
  const double cb = std::cos(c.motor_pitch), sb = std::sin(c.motor_pitch);
  const Vec3 rates{s.roll_rate, s.pitch_rate, s.yaw_rate};
  const Vec3 tau_d = drag_torque(rates, d);
  const double Fl = c.thrust * p.centroid_offset;

  // The rotor torque projects along the tilted spin axis; the offset thrust
  // adds a moment with arm l about the same body axes.
  dot.roll_rate = (tau_d.x + c.rotor_torque * ca * sb +
                   (p.J_yy - p.J_zz) * s.pitch_rate * s.yaw_rate +
                   Fl * ca * sb) /
                  p.J_xx;
  dot.pitch_rate = (tau_d.y - c.rotor_torque * sa -
                    (p.J_xx - p.J_zz) * s.roll_rate * s.yaw_rate - Fl * sa) /
                   p.J_yy;
  dot.yaw_rate = (tau_d.z + c.rotor_torque * ca * cb -
                  (p.J_yy - p.J_xx) * s.roll_rate * s.pitch_rate) /
                 p.J_zz;
  return out;
}

double planar_net_torque(double thrust, double beta, double theta,
                         const VehicleParams& p) {
  return thrust * p.cage_radius * std::sin(beta - theta) +
         p.tilt_mechanism_mass * p.gravity * p.centroid_offset *
             std::sin(theta);
}

DerivativeResult planar_ground_forces(double thrust, double beta, double theta,
                                      double tau_all, const VehicleParams& p) {
  DerivativeResult out;
  GroundForces& g = out.ground;
  g.net_torque = tau_all;
  g.normal_force = p.weight() - thrust * std::cos(beta - theta);
  if (g.normal_force <= 0.0) {
    out.status = DynamicsStatus::kLiftOff;
    return out;
  }
  g.required_friction = p.total_mass * p.cage_radius / p.J_yy * tau_all -
                        thrust * std::sin(beta - theta);
  g.max_static_friction = p.static_friction_coeff * g.normal_force;
  if (!g.no_slip()) out.status = DynamicsStatus::kSlipDetected;
  return out;
}

namespace {

// Shared core of the flat and inclined ground modes. gamma = 0 is exactly
// the flat case; roll and (on flat ground) z are frozen.
DerivativeResult ground_derivative(const VehicleState& s,
                                   const ActuatorCommand& c, double gamma,
                                   bool use_rotor_torque,
                                   const VehicleParams& p,
                                   const DragParams& d) {
  const double theta = s.pitch;
  const double beta = c.motor_pitch;
  DerivativeResult out =
      (gamma == 0.0)
          ? planar_ground_forces(c.thrust, beta, theta,
                                 planar_net_torque(c.thrust, beta, theta, p),
                                 p)
          : inclined_ground_forces(c.thrust, beta, theta, gamma, p);
  if (!out.usable()) return out;

  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double cps = std::cos(s.yaw), sps = std::sin(s.yaw);
  const double along = p.cage_radius / p.J_yy * out.ground.net_torque;

  VehicleState& dot = out.derivative;
  // z follows the surface: its rate is slaved to the horizontal velocity
  // along the heading, which vanishes identically on flat ground.
  dot.position = {s.velocity.x, s.velocity.y,
                  (s.velocity.x * cps + s.velocity.y * sps) * std::tan(gamma)};
  dot.velocity = {along * cg * cps, along * cg * sps, along * sg};

  dot.roll = 0.0;
  dot.roll_rate = 0.0;
  dot.pitch = s.pitch_rate;
  dot.yaw = s.yaw_rate;

  const double mgl =
      p.tilt_mechanism_mass * p.gravity * p.centroid_offset;
  dot.pitch_rate = -((p.J_xx - p.J_zz) * s.roll_rate * s.yaw_rate -
                     mgl * std::sin(theta - gamma)) /
                   p.J_yy;

  // Yaw resistance: quadratic aerodynamic fit plus a constant rolling term.
  double tau_fz = drag_torque({0.0, 0.0, s.yaw_rate}, d).z;
  if (s.yaw_rate > 0.0) tau_fz -= d.rolling_resistance_torque;
  if (s.yaw_rate < 0.0) tau_fz += d.rolling_resistance_torque;
  const double tau_p = use_rotor_torque ? c.rotor_torque : 0.0;
  dot.yaw_rate = (tau_fz * std::cos(theta) + tau_p * std::cos(beta + theta) +
                  (p.J_xx - p.J_yy) * s.roll_rate * s.pitch_rate) /
                 p.J_zz;
  return out;
}

}  // namespace

DerivativeResult planar_derivative(const VehicleState& s,
                                   const ActuatorCommand& c,
                                   const VehicleParams& p,
                                   const DragParams& d) {
  return ground_derivative(s, c, 0.0, /*use_rotor_torque=*/true, p, d);
}

DerivativeResult inclined_ground_forces(double thrust, double beta,
                                        double theta, double gamma,
                                        const VehicleParams& p) {
  DerivativeResult out;
  GroundForces& g = out.ground;
  const double sbt = std::sin(beta - theta);
  const double cbt = std::cos(beta - theta);
  const double mgl = p.tilt_mechanism_mass * p.gravity * p.centroid_offset;

  g.net_torque = thrust * p.cage_radius * sbt +
                 mgl * std::sin(theta - gamma) -
                 p.weight() * p.cage_radius * std::sin(gamma);
  g.normal_force = p.weight() * std::cos(gamma) - thrust * cbt;
  if (g.normal_force <= 0.0) {
    out.status = DynamicsStatus::kLiftOff;
    return out;
  }
  g.required_friction = p.total_mass * p.cage_radius / p.J_yy * g.net_torque +
                        p.weight() * std::sin(gamma) - thrust * sbt;
  g.max_static_friction = p.static_friction_coeff * g.normal_force;
  if (!g.no_slip()) out.status = DynamicsStatus::kSlipDetected;
  return out;
}

DerivativeResult inclined_derivative(const VehicleState& s,
                                     const ActuatorCommand& c, double gamma,
                                     const VehicleParams& p,
                                     const DragParams& d) {
  return ground_derivative(s, c, gamma, /*use_rotor_torque=*/false, p, d);
}

}  // namespace tiltcage
