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
// Continuous-time dynamics for the three locomotion modes: aerial thrust
// vectoring, flat-ground rolling, and rolling on an inclined surface.
// See docs/derivation_notes.md for the frame conventions and the full
// derivation of each equation set.

#ifndef TILTCAGE_DYNAMICS_HPP_
#define TILTCAGE_DYNAMICS_HPP_

#include <array>

#include "tiltcage/actuation.hpp"
#include "tiltcage/math.hpp"
#include "tiltcage/params.hpp"

namespace tiltcage {

// Full rigid-body state in the inertial ENU frame S. Attitude is ZYX Euler
// (yaw about z, then pitch about y, then roll about x).
struct VehicleState {
  Vec3 position;  // [m]
  Vec3 velocity;  // [m/s]
  double roll = 0.0;   // phi [rad]
  double pitch = 0.0;  // theta [rad]
  double yaw = 0.0;    // psi [rad]
  double roll_rate = 0.0;   // [rad/s]
  double pitch_rate = 0.0;
  double yaw_rate = 0.0;

  std::array<double, 12> to_array() const;
  static VehicleState from_array(const std::array<double, 12>& a);
  void wrap_attitude();
};

// Ground-contact force balance about the contact point.
struct GroundForces {
  double net_torque = 0.0;           // tau_all [N m]
  double required_friction = 0.0;    // f [N]
  double normal_force = 0.0;         // F_N [N]
  double max_static_friction = 0.0;  // mu * F_N [N]

  bool no_slip() const {
    return std::abs(required_friction) <= max_static_friction;
  }
};

enum class DynamicsStatus {
  kOk,
  kSingularAttitude,  // |pitch| at or beyond the Euler-singularity guard
  kLiftOff,           // normal force would be non-positive
  kSlipDetected,      // |f| > mu*F_N; derivative still holds the no-slip value
};

struct DerivativeResult {
  VehicleState derivative;  // d(state)/dt; valid unless status is fatal
  GroundForces ground;      // populated by the ground modes
  DynamicsStatus status = DynamicsStatus::kOk;

  bool usable() const {
    return status == DynamicsStatus::kOk ||
           status == DynamicsStatus::kSlipDetected;
  }
};

// Pitch magnitude at which the aerial Euler kinematics are treated as
// singular.
inline constexpr double kSingularPitch = deg2rad(85.0);

// Body-to-world rotation for ZYX Euler angles.
Mat3 body_to_world(double roll, double pitch, double yaw);

// Aerodynamic drag force opposing the velocity, 0.5*C_d*rho*|v|^2*A.
Vec3 drag_force(const Vec3& velocity, const DragParams& d);

// Quadratic angular drag, component-wise -k_i * w_i * |w_i|.
Vec3 drag_torque(const Vec3& body_rates, const DragParams& d);

// Free-flight dynamics: thrust vector rotated into S minus weight and drag;
// angular accelerations include gyroscopic coupling, the rotor-torque
// projection along the tilt direction, and the thrust moment arm l.
DerivativeResult aerial_derivative(const VehicleState& s,
                                   const ActuatorCommand& c,
                                   const VehicleParams& p,
                                   const DragParams& d);

// Net torque about the ground contact point on flat ground:
// F*r*sin(beta - theta) + m*g*l*sin(theta).
double planar_net_torque(double thrust, double beta, double theta,
                         const VehicleParams& p);

// Friction demanded by the no-slip rolling of the net torque, the normal
// force, and the friction budget mu*F_N. Status kLiftOff when F_N <= 0.
DerivativeResult planar_ground_forces(double thrust, double beta, double theta,
                                      double tau_all, const VehicleParams& p);

// Flat-ground rolling dynamics. Translation is driven through the contact
// torque; z and roll are frozen. Slip is reported, never resolved here.
DerivativeResult planar_derivative(const VehicleState& s,
                                   const ActuatorCommand& c,
                                   const VehicleParams& p,
                                   const DragParams& d);

// Rolling on a surface inclined by gamma (positive = climbing along the
// heading). Reduces exactly to planar_derivative at gamma = 0. The rotor
// differential torque is ignored on the slope.
DerivativeResult inclined_derivative(const VehicleState& s,
                                     const ActuatorCommand& c, double gamma,
                                     const VehicleParams& p,
                                     const DragParams& d);

// Ground forces on a slope (net torque, friction demand, normal force).
DerivativeResult inclined_ground_forces(double thrust, double beta,
                                        double theta, double gamma,
                                        const VehicleParams& p);

}  // namespace tiltcage

#endif  // TILTCAGE_DYNAMICS_HPP_
