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
// Energy-optimal actuation on flat ground: given a desired heading
// acceleration, choose body pitch, motor pitch, and thrust minimizing total
// power subject to the acceleration equality, ground contact, no-slip, and
// the hardware boxes. The acceleration equality is eliminated analytically
// (thrust in closed form from the tilt angles), reducing the program to a
// bound-constrained search that a dense grid oracle can cross-check.

#ifndef TILTCAGE_ENERGY_OPT_HPP_
#define TILTCAGE_ENERGY_OPT_HPP_

#include <string>
#include <vector>

#include "tiltcage/params.hpp"

namespace tiltcage {

struct PowerBreakdown {
  double motor = 0.0;  // P_p = C_k * F^2 [W]
  double servo = 0.0;  // P_s = (1/r) * m*g*l * v_b * sin(theta) [W]
  double total() const { return motor + servo; }
};

// Instantaneous power for thrust F, body pitch theta, and cage surface
// speed v_b.
PowerBreakdown power(double thrust, double theta, double v_b,
                     const VehicleParams& p);

enum class Stage { kI, kII, kIII };
const char* stage_name(Stage s);

struct AllocationResult {
  double body_pitch = 0.0;   // theta [rad]
  double motor_pitch = 0.0;  // beta [rad]
  double thrust = 0.0;       // F [N]
  PowerBreakdown power;
  std::vector<std::string> active_constraints;
  Stage stage = Stage::kI;
};

// Largest heading acceleration achievable by centroid tilt alone:
// a_I = (r / J_yy) * m * g * l * sin(theta_max).
double max_centroid_acceleration(const VehicleParams& p);

// Minimum-power actuation meeting the desired acceleration. Throws
// InfeasibleError (naming the binding constraint) when the demand exceeds
// the feasible envelope.
AllocationResult optimal_allocation(double a_des, const VehicleParams& p);

struct GridSpec {
  double theta_step = deg2rad(0.1);
  double beta_step = deg2rad(0.5);
};

// Exhaustive oracle: scans the (theta, beta) box, solves thrust in closed
// form from the acceleration equality, discards infeasible candidates, and
// returns the minimum-power survivor.
AllocationResult brute_force_allocation(double a_des, const VehicleParams& p,
                                        const GridSpec& grid = {});

struct SweepSample {
  double a_des = 0.0;
  bool feasible = false;
  std::string binding;  // set when infeasible
  AllocationResult result;
};

struct SweepResult {
  std::vector<SweepSample> samples;
  // Accelerations at which the optimal actuation changes stage, in order.
  std::vector<double> stage_boundaries;
};

// Optimal allocations across [a_min, a_max] with detected stage-transition
// accelerations. Infeasible samples are marked, not fatal.
SweepResult sweep_acceleration(double a_min, double a_max, int n_samples,
                               const VehicleParams& p);

}  // namespace tiltcage

#endif  // TILTCAGE_ENERGY_OPT_HPP_
