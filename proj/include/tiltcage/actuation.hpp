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

#ifndef TILTCAGE_ACTUATION_HPP_
#define TILTCAGE_ACTUATION_HPP_

#include <string>

#include "tiltcage/math.hpp"
#include "tiltcage/params.hpp"

namespace tiltcage {

// One command to all actuators. Angles are radians, thrust newtons.
struct ActuatorCommand {
  double motor_roll = 0.0;     // alpha, rotor assembly roll relative to body
  double motor_pitch = 0.0;    // beta, rotor assembly pitch relative to body
  double thrust = 0.0;         // F, collective of both rotors
  double rotor_torque = 0.0;   // tau_p, differential yaw torque
  double body_tilt_cmd = 0.0;  // theta target for the centroid tilt servo
};

struct RotorSpeeds {
  double n1 = 0.0;  // upper rotor [rev/s], >= 0
  double n2 = 0.0;  // lower rotor [rev/s], >= 0
};

struct ThrustTorque {
  double thrust = 0.0;        // F = C_T * rho * (n1^2 + n2^2)
  double rotor_torque = 0.0;  // tau_p = C_p * rho * (n1^2 - n2^2) * D^5
};

// Forward map from rotor speeds to collective thrust and differential yaw
// torque. Throws std::out_of_range if a speed is negative or above n_max.
ThrustTorque rotor_forces(const RotorSpeeds& s, const RotorParams& rp,
                          double air_density);

struct SpeedAllocation {
  RotorSpeeds speeds;    // requested solution, or the clipped feasible one
  bool feasible = true;  // false when a bound had to be clipped
  std::string violated;  // name of the failed bound when infeasible
};

// Inverts rotor_forces for a (thrust, torque) pair by solving the 2x2
// linear system in (n1^2, n2^2). When the demand is outside the envelope,
// the returned speeds are the clipped feasible values and `violated` names
// the bound.
SpeedAllocation allocate_speeds(double thrust, double rotor_torque,
                                const RotorParams& rp, double air_density);

// Produces a yaw torque by spinning a single rotor, which is the minimum
// thrust that can realize that torque. Infeasible when |torque| exceeds
// what one rotor at n_max provides.
SpeedAllocation min_thrust_torque_allocation(double rotor_torque,
                                             const RotorParams& rp,
                                             double air_density);

// Thrust vector in the body frame for tilt angles (alpha, beta):
// [F cos(a) sin(b), -F sin(a), F cos(a) cos(b)].
Vec3 thrust_vector_body(double thrust, double alpha, double beta);

struct ClampedCommand {
  ActuatorCommand cmd;
  bool roll_saturated = false;
  bool pitch_saturated = false;
  bool thrust_saturated = false;
  bool torque_saturated = false;
  bool tilt_saturated = false;

  bool any_saturated() const {
    return roll_saturated || pitch_saturated || thrust_saturated ||
           torque_saturated || tilt_saturated;
  }
};

// Saturates every command field to its configured interval, reporting which
// fields were clipped. Idempotent.
ClampedCommand clamp_command(const ActuatorCommand& c, const VehicleParams& p,
                             const RotorParams& rp, double air_density);

}  // namespace tiltcage

#endif  // TILTCAGE_ACTUATION_HPP_
