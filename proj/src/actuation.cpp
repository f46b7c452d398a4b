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

#include "tiltcage/actuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tiltcage {
namespace {

double pow5(double x) { return x * x * x * x * x; }

}  // namespace

ThrustTorque rotor_forces(const RotorSpeeds& s, const RotorParams& rp,
                          double air_density) {
  if (s.n1 < 0.0 || s.n2 < 0.0)
    throw std::out_of_range("rotor speed is negative");
  if (s.n1 > rp.max_rotor_speed || s.n2 > rp.max_rotor_speed)
    throw std::out_of_range("rotor speed exceeds n_max");
  const double n1sq = s.n1 * s.n1;
  const double n2sq = s.n2 * s.n2;
  ThrustTorque out;
  out.thrust = rp.thrust_coeff * air_density * (n1sq + n2sq);
  out.rotor_torque =
      rp.torque_coeff * air_density * (n1sq - n2sq) * pow5(rp.disc_diameter);
  return out;
}

SpeedAllocation allocate_speeds(double thrust, double rotor_torque,
                                const RotorParams& rp, double air_density) {
  SpeedAllocation out;
  const double kt = rp.thrust_coeff * air_density;
  const double kq = rp.torque_coeff * air_density * pow5(rp.disc_diameter);
  // n1^2 + n2^2 = thrust/kt, n1^2 - n2^2 = torque/kq.
  const double sum = thrust / kt;
  const double diff = rotor_torque / kq;
  double n1sq = 0.5 * (sum + diff);
  double n2sq = 0.5 * (sum - diff);
  const double max_sq = rp.max_rotor_speed * rp.max_rotor_speed;

  if (n1sq < 0.0) {
    out.feasible = false;
    out.violated = "n1 >= 0";
    n1sq = 0.0;
  } else if (n1sq > max_sq) {
    out.feasible = false;
    out.violated = "n1 <= n_max";
    n1sq = max_sq;
  }
  if (n2sq < 0.0) {
    out.feasible = false;
    if (out.violated.empty()) out.violated = "n2 >= 0";
    n2sq = 0.0;
  } else if (n2sq > max_sq) {
    out.feasible = false;
    if (out.violated.empty()) out.violated = "n2 <= n_max";
    n2sq = max_sq;
  }
  out.speeds.n1 = std::sqrt(n1sq);
  out.speeds.n2 = std::sqrt(n2sq);
  return out;
}

SpeedAllocation min_thrust_torque_allocation(double rotor_torque,
                                             const RotorParams& rp,
                                             double air_density) {
  SpeedAllocation out;
  if (rotor_torque == 0.0) return out;
  const double kq = rp.torque_coeff * air_density * pow5(rp.disc_diameter);
  double nsq = std::abs(rotor_torque) / kq;
  const double max_sq = rp.max_rotor_speed * rp.max_rotor_speed;
  if (nsq > max_sq) {
    out.feasible = false;
    out.violated = "|tau_p| <= C_p*rho*n_max^2*D^5";
    nsq = max_sq;
  }
  const double n = std::sqrt(nsq);
  if (rotor_torque > 0.0) {
    out.speeds.n1 = n;
  } else {
    out.speeds.n2 = n;
  }
  return out;
}

Vec3 thrust_vector_body(double thrust, double alpha, double beta) {
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  return {thrust * ca * sb, -thrust * sa, thrust * ca * cb};
}

ClampedCommand clamp_command(const ActuatorCommand& c, const VehicleParams& p,
                             const RotorParams& rp, double air_density) {
  ClampedCommand out;
  out.cmd = c;

  auto clip = [](double v, double lo, double hi, bool& flag) {
    if (v < lo) {
      flag = true;
      return lo;
    }
    if (v > hi) {
      flag = true;
      return hi;
    }
    return v;
  };

  out.cmd.motor_roll =
      clip(c.motor_roll, p.alpha_min, p.alpha_max, out.roll_saturated);
  out.cmd.motor_pitch =
      clip(c.motor_pitch, p.beta_min, p.beta_max, out.pitch_saturated);
  out.cmd.thrust = clip(c.thrust, p.F_min, p.F_max, out.thrust_saturated);
  out.cmd.body_tilt_cmd =
      clip(c.body_tilt_cmd, p.theta_min, p.theta_max, out.tilt_saturated);
  const double tau_max = rp.max_yaw_torque(air_density);
  out.cmd.rotor_torque =
      clip(c.rotor_torque, -tau_max, tau_max, out.torque_saturated);
  return out;
}

}  // namespace tiltcage
