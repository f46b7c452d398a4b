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

#ifndef TILTCAGE_INTEGRATOR_HPP_
#define TILTCAGE_INTEGRATOR_HPP_

#include <array>
#include <cstddef>

#include "tiltcage/dynamics.hpp"

namespace tiltcage {

inline double axpy(double y, double a, double k) { return y + a * k; }

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double a,
                           const std::array<double, N>& k) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * k[i];
  return out;
}

// Classical fixed-step 4th-order Runge-Kutta update for y' = f(t, y).
// Works for scalar states and std::array states.
template <typename State, typename F>
State rk4_step(F&& f, double t, const State& y, double dt) {
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * dt, axpy(y, 0.5 * dt, k1));
  const State k3 = f(t + 0.5 * dt, axpy(y, 0.5 * dt, k2));
  const State k4 = f(t + dt, axpy(y, dt, k3));
  State sum = axpy(k1, 2.0, k2);
  sum = axpy(sum, 2.0, k3);
  sum = axpy(sum, 1.0, k4);
  return axpy(y, dt / 6.0, sum);
}

// RK4 update of a full vehicle state; attitude angles are re-wrapped to
// (-pi, pi] after the step.
template <typename F>
VehicleState rk4_step_state(F&& f, double t, const VehicleState& s,
                            double dt) {
  auto wrapped = [&f](double tt, const std::array<double, 12>& a) {
    return f(tt, VehicleState::from_array(a)).to_array();
  };
  VehicleState out =
      VehicleState::from_array(rk4_step(wrapped, t, s.to_array(), dt));
  out.wrap_attitude();
  return out;
}

}  // namespace tiltcage

#endif  // TILTCAGE_INTEGRATOR_HPP_
