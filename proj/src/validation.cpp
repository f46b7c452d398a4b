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

#include "tiltcage/validation.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "tiltcage/energy_opt.hpp"
#include "tiltcage/errors.hpp"
#include "tiltcage/integrator.hpp"
#include "tiltcage/simulation.hpp"

namespace tiltcage {
namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

CheckResult check_flat_limit(const ParamSet& params) {
  CheckResult out{"inclined dynamics reduce to planar at gamma=0", false,
                  false, ""};
  std::mt19937_64 gen(2026);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    VehicleState s;
    s.position = {4.0 * u(gen), 4.0 * u(gen), 0.0};
    s.velocity = {u(gen), u(gen), 0.0};
    s.pitch = params.vehicle.theta_max * u(gen);
    s.yaw = kPi * u(gen);
    s.pitch_rate = u(gen);
    s.yaw_rate = u(gen);
    s.roll_rate = u(gen);
    ActuatorCommand c;
    c.motor_pitch = params.vehicle.beta_max * u(gen);
    c.thrust = 0.5 * params.vehicle.F_max * std::abs(u(gen));
    c.rotor_torque = 0.0;  // slope model ignores the rotor differential
    const auto a = planar_derivative(s, c, params.vehicle, params.drag);
    const auto b = inclined_derivative(s, c, 0.0, params.vehicle, params.drag);
    if (a.status != b.status) {
      out.detail = "status mismatch";
      return out;
    }
    if (!a.usable()) continue;
    const auto av = a.derivative.to_array(), bv = b.derivative.to_array();
    for (int j = 0; j < 12; ++j)
      worst = std::max(worst, std::abs(av[j] - bv[j]));
  }
  out.pass = worst <= 1e-12;
  out.detail = "max |diff| = " + fmt("%.3e", worst);
  return out;
}

CheckResult check_rk4_order(const ParamSet&) {
  CheckResult out{"integrator convergence order is 4", false, false, ""};
  // Smooth nonlinear test system: driven pendulum with damping.
  auto rhs = [](double t, const std::array<double, 2>& y) {
    return std::array<double, 2>{
        y[1], -std::sin(y[0]) - 0.1 * y[1] + 0.3 * std::cos(t)};
  };
  auto integrate = [&](double dt) {
    std::array<double, 2> y{0.8, 0.0};
    const int n = static_cast<int>(std::llround(2.0 / dt));
    for (int i = 0; i < n; ++i) y = rk4_step(rhs, i * dt, y, dt);
    return y;
  };
  const auto ref = integrate(2.0 / 16384.0);
  auto err = [&](double dt) {
    const auto y = integrate(dt);
    return std::hypot(y[0] - ref[0], y[1] - ref[1]);
  };
  const double e1 = err(0.02), e2 = err(0.01);
  const double order = std::log2(e1 / e2);
  out.pass = std::abs(order - 4.0) <= 0.2;
  out.detail = "measured order = " + fmt("%.3f", order);
  return out;
}

CheckResult check_oracle_agreement(const ParamSet& params) {
  CheckResult out{"optimizer matches the grid oracle", false, false, ""};
  double worst = 0.0;
  for (double a : {0.001, 0.003, 0.008, 0.015, 0.02}) {
    try {
      const AllocationResult opt = optimal_allocation(a, params.vehicle);
      const AllocationResult ora = brute_force_allocation(a, params.vehicle);
      const double gap =
          std::abs(opt.power.total() - ora.power.total()) /
          std::max(ora.power.total(), 1e-9);
      worst = std::max(worst, gap);
    } catch (const InfeasibleError& e) {
      out.detail = std::string("infeasible: ") + e.what();
      return out;
    }
  }
  out.pass = worst <= 1e-3;
  out.detail = "max relative gap = " + fmt("%.3e", worst);
  return out;
}

CheckResult check_rotor_plane(const ParamSet& params,
                              const ControlConfig& control) {
  CheckResult out{"energy-saving rotor plane stays level", false, false, ""};
  Scenario sc = make_scenario("planar-cruise");
  SimConfig cfg;
  cfg.duration = 5.0;
  SimResult run = simulate(sc, control, params, cfg);
  double worst = 0.0;
  for (const TelemetryRow& row : run.telemetry.rows) {
    const Mat3 R = body_to_world(row.state.roll, row.state.pitch,
                                 row.state.yaw);
    const Vec3 axis =
        R * thrust_vector_body(1.0, row.cmd.motor_roll, row.cmd.motor_pitch);
    const double dev = std::acos(std::clamp(axis.z / axis.norm(), -1.0, 1.0));
    worst = std::max(worst, dev);
  }
  out.pass = worst <= 1e-6;
  out.detail = "max deviation = " + fmt("%.3e", worst) + " rad";
  return out;
}

CheckResult check_hover_fixed_point(const ParamSet& params,
                                    const ControlConfig& control) {
  CheckResult out{"closed-loop hover is a fixed point", false, false, ""};
  ParamSet p = params;
  p.drag = DragParams{};
  p.drag.drag_coefficient = 0.0;
  p.drag.frontal_area = 0.0;
  p.drag.k_tau_x = p.drag.k_tau_y = p.drag.k_tau_z = 0.0;
  Scenario sc = make_scenario("hover");
  SimConfig cfg;
  cfg.duration = 2.0;
  SimResult run = simulate(sc, control, p, cfg);
  double drift = 0.0;
  for (const TelemetryRow& row : run.telemetry.rows)
    drift = std::max(drift,
                     std::abs(row.state.position.z - sc.hover_point.z));
  out.pass = run.exit_code == 0 && drift <= 1e-6;
  out.detail = "max |dz| = " + fmt("%.3e", drift) + " m";
  return out;
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ParamSet& params,
                                              const ControlConfig& control) {
  std::vector<CheckResult> out;
  out.push_back(check_flat_limit(params));
  out.push_back(check_rk4_order(params));
  out.push_back(check_oracle_agreement(params));
  out.push_back(check_rotor_plane(params, control));
  out.push_back(check_hover_fixed_point(params, control));
  if (params.vehicle.static_friction_coeff == 0.0) {
    out.push_back({"note: mu = 0, no-slip margins are degenerate", true, true,
                   "slip checks report ratio against a zero budget"});
  }
  return out;
}

}  // namespace tiltcage
