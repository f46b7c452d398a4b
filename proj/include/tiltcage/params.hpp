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

#ifndef TILTCAGE_PARAMS_HPP_
#define TILTCAGE_PARAMS_HPP_

#include <string>
#include <vector>

#include "tiltcage/math.hpp"

namespace tiltcage {

// Physical constants of the vehicle. Immutable after load; every model
// equation resolves its symbols against this set.
struct VehicleParams {
  double total_mass = 0.22;           // M [kg]
  double tilt_mechanism_mass = 0.11;  // m [kg], pendulum mass inside the cage
  double gravity = 9.8;               // g [m/s^2]
  double cage_radius = 0.12;          // r [m]
  double centroid_offset = 0.07;      // l [m], pivot-to-centroid distance
  double motor_power_coeff = 10.0;    // C_k [W/N^2]
  double static_friction_coeff = 0.35;  // mu
  double J_xx = 1.0;                  // [kg m^2]
  double J_yy = 1.0;                  // [kg m^2]
  double J_zz = 1.0;                  // [kg m^2]
  double theta_min = deg2rad(-15.0);  // body pitch limits [rad]
  double theta_max = deg2rad(15.0);
  double beta_min = deg2rad(-60.0);   // motor pitch limits [rad]
  double beta_max = deg2rad(60.0);
  double alpha_min = deg2rad(-60.0);  // motor roll limits [rad]
  double alpha_max = deg2rad(60.0);
  double F_min = 0.0;                 // thrust limits [N]
  double F_max = 7.84;

  double weight() const { return total_mass * gravity; }
};

// Aerodynamic drag model constants. Setting every field to zero disables
// drag exactly.
struct DragParams {
  double drag_coefficient = 1.0;  // C_d
  double air_density = 1.225;     // rho [kg/m^3]
  double frontal_area = 0.0452389342116935;  // A [m^2], pi*r^2 of the cage
  // Quadratic angular-drag fit tau_i = -k_i * w_i * |w_i|.
  double k_tau_x = 2.0e-4;  // [N m s^2 / rad^2]
  double k_tau_y = 2.0e-4;
  double k_tau_z = 2.0e-4;
  // Constant rolling-resistance torque about yaw while grounded [N m].
  double rolling_resistance_torque = 0.0;
};

// Coaxial rotor pair constants. The thrust coefficient is lumped
// (F = C_T * rho * (n1^2 + n2^2)); by default it is calibrated so both
// rotors at max speed produce F_max.
struct RotorParams {
  double thrust_coeff = 4.0816326530612245e-5;  // C_T [N s^2]
  double torque_coeff = 0.02;                   // C_p
  double disc_diameter = 0.18;                  // D [m]
  double max_rotor_speed = 280.0;               // n_max [rev/s]

  // Largest yaw torque a single rotor at n_max can produce.
  double max_yaw_torque(double air_density) const {
    double d = disc_diameter;
    return torque_coeff * air_density * max_rotor_speed * max_rotor_speed *
           d * d * d * d * d;
  }
};

struct ParamSet {
  VehicleParams vehicle;
  DragParams drag;
  RotorParams rotor;
};

// Parses a JSON config with top-level objects "vehicle", "drag", "rotor"
// and an "angle_unit" of "deg" or "rad" (applies to the angle-limit keys).
// Optional keys take the documented defaults; the result is validated.
// Throws MissingKeyError, ParseError, or ValidationError.
ParamSet load_params(const std::string& config_text);
ParamSet load_params_file(const std::string& path);

// Serializes with full precision (radians) such that reloading reproduces
// the values bit-for-bit.
std::string params_to_json(const ParamSet& params);

// Returns every violated invariant (empty means ok). Messages name the
// invariant, e.g. "M > m".
std::vector<std::string> validate_params(const VehicleParams& v,
                                         const DragParams& d,
                                         const RotorParams& r);

}  // namespace tiltcage

#endif  // TILTCAGE_PARAMS_HPP_
