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

#include "tiltcage/energy_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tiltcage/errors.hpp"

namespace tiltcage {
namespace {

constexpr double kSinSingular = 1e-12;
constexpr double kEqualityTol = 1e-9;
constexpr double kNoSlipTol = 1e-9;

struct Candidate {
  double theta = 0.0;
  double beta = 0.0;
  double thrust = 0.0;
  double total_power = std::numeric_limits<double>::infinity();
  bool feasible = false;
  std::string violation;
};

// Thrust solved from the acceleration equality for fixed tilt angles;
// returns false when sin(beta - theta) is singular and the equality cannot
// hold with F = 0 either.
bool solve_thrust(double a_des, double theta, double beta,
                  const VehicleParams& p, double* thrust) {
  const double mgl =
      p.tilt_mechanism_mass * p.gravity * p.centroid_offset;
  const double residual =
      a_des * p.J_yy / p.cage_radius - mgl * std::sin(theta);
  const double sbt = std::sin(beta - theta);
  if (std::abs(sbt) < kSinSingular) {
    if (std::abs(residual) <= kEqualityTol) {
      *thrust = 0.0;
      return true;
    }
    return false;
  }
  *thrust = residual / (p.cage_radius * sbt);
  return true;
}

Candidate evaluate(double a_des, double theta, double beta,
                   const VehicleParams& p) {
  Candidate c;
  c.theta = theta;
  c.beta = beta;
  if (!solve_thrust(a_des, theta, beta, p, &c.thrust)) {
    c.violation = "acceleration equality";
    return c;
  }
  if (c.thrust < p.F_min - 1e-12) {
    c.violation = "F >= F_min";
    return c;
  }
  if (c.thrust > p.F_max + 1e-12) {
    c.violation = "F <= F_max";
    return c;
  }
  const double sbt = std::sin(beta - theta);
  const double cbt = std::cos(beta - theta);
  const double normal = p.weight() - c.thrust * cbt;
  if (normal <= 0.0) {
    c.violation = "F_N > 0";
    return c;
  }
  const double mgl =
      p.tilt_mechanism_mass * p.gravity * p.centroid_offset;
  const double lhs = p.total_mass * p.cage_radius / p.J_yy *
                         (c.thrust * p.cage_radius * sbt +
                          mgl * std::sin(theta)) -
                     c.thrust * sbt - p.static_friction_coeff * normal;
  if (lhs > kNoSlipTol) {
    c.violation = "no-slip";
    return c;
  }
  c.feasible = true;
  const double v_b = std::sqrt(a_des * p.cage_radius);
  c.total_power = power(c.thrust, theta, v_b, p).total();
  return c;
}

// Less-than with the documented tie-breaking: lower power, then lower
// thrust, then smaller |theta|, then smaller |beta|.
bool better(const Candidate& a, const Candidate& b) {
  if (!a.feasible) return false;
  if (!b.feasible) return true;
  const double tol = 1e-12 * std::max(1.0, std::max(a.total_power,
                                                    b.total_power));
  if (a.total_power < b.total_power - tol) return true;
  if (a.total_power > b.total_power + tol) return false;
  if (a.thrust != b.thrust) return a.thrust < b.thrust;
  if (std::abs(a.theta) != std::abs(b.theta))
    return std::abs(a.theta) < std::abs(b.theta);
  return std::abs(a.beta) < std::abs(b.beta);
}

AllocationResult to_result(const Candidate& c, double a_des,
                           const VehicleParams& p) {
  AllocationResult out;
  out.body_pitch = c.theta;
  out.motor_pitch = c.beta;
  out.thrust = c.thrust;
  out.power = power(c.thrust, c.theta, std::sqrt(a_des * p.cage_radius), p);

  out.active_constraints.push_back("acceleration equality");
  const double kActiveTol = 1e-9;
  if (std::abs(c.theta - p.theta_max) <= kActiveTol)
    out.active_constraints.push_back("theta = theta_max");
  if (std::abs(c.theta - p.theta_min) <= kActiveTol)
    out.active_constraints.push_back("theta = theta_min");
  if (std::abs(c.beta - p.beta_max) <= kActiveTol)
    out.active_constraints.push_back("beta = beta_max");
  if (std::abs(c.beta - p.beta_min) <= kActiveTol)
    out.active_constraints.push_back("beta = beta_min");
  if (std::abs(c.thrust - p.F_min) <= kActiveTol)
    out.active_constraints.push_back("F = F_min");
  if (std::abs(c.thrust - p.F_max) <= kActiveTol)
    out.active_constraints.push_back("F = F_max");

  if (c.thrust <= 1e-9) {
    out.stage = Stage::kI;
  } else if (std::abs(c.theta) <= 1e-6) {
    out.stage = Stage::kIII;
  } else {
    out.stage = Stage::kII;
  }
  return out;
}

// Scans theta along one beta boundary and refines around the discrete
// minimum by golden-section. For any optimum with F > 0 the motor pitch
// sits at a box corner: power depends on beta only through F, and F shrinks
// monotonically as |sin(beta - theta)| grows.
Candidate scan_beta_edge(double a_des, double beta, const VehicleParams& p) {
  constexpr int kSamples = 2000;
  Candidate best;
  double best_theta = 0.0;
  const double span = p.theta_max - p.theta_min;
  for (int i = 0; i <= kSamples; ++i) {
    const double theta = p.theta_min + span * i / kSamples;
    Candidate c = evaluate(a_des, theta, beta, p);
    if (better(c, best)) {
      best = c;
      best_theta = theta;
    }
  }
  if (!best.feasible) return best;

  // Golden-section refinement in a two-grid-step bracket, with infeasible
  // points treated as +inf.
  const double step = span / kSamples;
  double lo = std::max(p.theta_min, best_theta - 2.0 * step);
  double hi = std::min(p.theta_max, best_theta + 2.0 * step);
  auto cost = [&](double theta) {
    Candidate c = evaluate(a_des, theta, beta, p);
    return c.feasible ? c.total_power
                      : std::numeric_limits<double>::infinity();
  };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cost(x2);
    }
  }
  Candidate refined = evaluate(a_des, 0.5 * (lo + hi), beta, p);
  // Exact box corners are preferred when they are just as good.
  for (double corner : {p.theta_min, 0.0, p.theta_max}) {
    Candidate c = evaluate(a_des, corner, beta, p);
    if (better(c, refined)) refined = c;
  }
  return better(refined, best) ? refined : best;
}

}  // namespace

PowerBreakdown power(double thrust, double theta, double v_b,
                     const VehicleParams& p) {
  PowerBreakdown out;
  out.motor = p.motor_power_coeff * thrust * thrust;
  out.servo = p.tilt_mechanism_mass * p.gravity * p.centroid_offset * v_b *
              std::sin(theta) / p.cage_radius;
  return out;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::kI:
      return "I";
    case Stage::kII:
      return "II";
    case Stage::kIII:
      return "III";
  }
  return "?";
}

double max_centroid_acceleration(const VehicleParams& p) {
  return p.cage_radius / p.J_yy * p.tilt_mechanism_mass * p.gravity *
         p.centroid_offset * std::sin(p.theta_max);
}

AllocationResult optimal_allocation(double a_des, const VehicleParams& p) {
  if (a_des < 0.0)
    throw InfeasibleError("a_des >= 0", "negative acceleration demanded");
  if (a_des == 0.0) {
    Candidate zero = evaluate(0.0, 0.0, 0.0, p);
    return to_result(zero, 0.0, p);
  }

  Candidate best;
  // Tilt-only candidate: F = 0 and the pendulum torque alone meets the
  // demand. Exact while the demand stays below the tilt envelope.
  const double mgl =
      p.tilt_mechanism_mass * p.gravity * p.centroid_offset;
  const double sin_theta = a_des * p.J_yy / (p.cage_radius * mgl);
  if (sin_theta <= std::sin(p.theta_max) + 1e-15 && sin_theta >= -1.0) {
    const double theta =
        std::asin(std::min(sin_theta, std::sin(p.theta_max)));
    Candidate tilt_only;
    tilt_only.theta = theta;
    tilt_only.beta = 0.0;
    tilt_only.thrust = 0.0;
    // Feasibility: friction demand is M*a, budget is mu*M*g.
    if (p.total_mass * a_des <=
        p.static_friction_coeff * p.weight() + kNoSlipTol) {
      tilt_only.feasible = true;
      tilt_only.total_power =
          power(0.0, theta, std::sqrt(a_des * p.cage_radius), p).total();
      best = tilt_only;
    }
  }

  Candidate hi = scan_beta_edge(a_des, p.beta_max, p);
  if (better(hi, best)) best = hi;
  Candidate lo = scan_beta_edge(a_des, p.beta_min, p);
  if (better(lo, best)) best = lo;

  if (!best.feasible) {
    // Name the dominant violation along the usable edge.
    std::map<std::string, int> counts;
    for (int i = 0; i <= 200; ++i) {
      const double theta =
          p.theta_min + (p.theta_max - p.theta_min) * i / 200.0;
      Candidate c = evaluate(a_des, theta, p.beta_max, p);
      if (!c.feasible) ++counts[c.violation];
    }
    std::string binding = "F <= F_max";
    int top = -1;
    for (const auto& [name, n] : counts) {
      if (n > top) {
        top = n;
        binding = name;
      }
    }
    throw InfeasibleError(binding, "a_des = " + std::to_string(a_des));
  }
  return to_result(best, a_des, p);
}

AllocationResult brute_force_allocation(double a_des, const VehicleParams& p,
                                        const GridSpec& grid) {
  if (grid.theta_step <= 0.0 || grid.beta_step <= 0.0)
    throw InfeasibleError("grid resolution > 0", "");
  if (a_des == 0.0) return to_result(evaluate(0.0, 0.0, 0.0, p), 0.0, p);

  const int n_theta = static_cast<int>(
      std::ceil((p.theta_max - p.theta_min) / grid.theta_step));
  const int n_beta =
      static_cast<int>(std::ceil((p.beta_max - p.beta_min) / grid.beta_step));
  Candidate best;
  for (int i = 0; i <= n_theta; ++i) {
    const double theta =
        std::min(p.theta_min + i * grid.theta_step, p.theta_max);
    for (int j = 0; j <= n_beta; ++j) {
      const double beta = std::min(p.beta_min + j * grid.beta_step, p.beta_max);
      Candidate c = evaluate(a_des, theta, beta, p);
      if (better(c, best)) best = c;
    }
  }
  if (!best.feasible)
    throw InfeasibleError("no feasible grid candidate",
                          "a_des = " + std::to_string(a_des));
  return to_result(best, a_des, p);
}

SweepResult sweep_acceleration(double a_min, double a_max, int n_samples,
                               const VehicleParams& p) {
  if (!(0.0 < a_min && a_min < a_max))
    throw InfeasibleError("0 < a_min < a_max", "");
  if (n_samples < 2) throw InfeasibleError("n_samples >= 2", "");

  SweepResult out;
  out.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    SweepSample s;
    s.a_des = a_min + (a_max - a_min) * i / (n_samples - 1);
    try {
      s.result = optimal_allocation(s.a_des, p);
      s.feasible = true;
    } catch (const InfeasibleError& e) {
      s.feasible = false;
      s.binding = e.binding;
    }
    out.samples.push_back(std::move(s));
  }

  // Refine each stage transition between adjacent feasible samples.
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    const SweepSample& a = out.samples[i - 1];
    const SweepSample& b = out.samples[i];
    if (!a.feasible || !b.feasible) continue;
    if (a.result.stage == b.result.stage) continue;
    double lo = a.a_des, hi = b.a_des;
    const Stage lo_stage = a.result.stage;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      Stage mid_stage;
      try {
        mid_stage = optimal_allocation(mid, p).stage;
      } catch (const InfeasibleError&) {
        break;
      }
      if (mid_stage == lo_stage) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.stage_boundaries.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace tiltcage
