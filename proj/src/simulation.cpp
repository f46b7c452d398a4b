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

#include "tiltcage/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tiltcage/errors.hpp"
#include "tiltcage/integrator.hpp"

namespace tiltcage {
namespace {

bool finite_state(const VehicleState& s) {
  for (double v : s.to_array())
    if (!std::isfinite(v)) return false;
  return true;
}

double bearing(const Vec3& tangent) {
  return std::atan2(tangent.y, tangent.x);
}

void append_csv_row(std::string& out, const TelemetryRow& r) {
  char buf[768];
  std::snprintf(
      buf, sizeof(buf),
      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,"
      "%.12g,%.12g,%.12g,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,"
      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,"
      "%.12g,%.12g,%.12g,%.12g\n",
      r.t, r.state.position.x, r.state.position.y, r.state.position.z,
      r.state.velocity.x, r.state.velocity.y, r.state.velocity.z,
      r.state.roll, r.state.pitch, r.state.yaw, r.state.roll_rate,
      r.state.pitch_rate, r.state.yaw_rate, motion_mode_name(r.mode),
      r.cmd.motor_roll, r.cmd.motor_pitch, r.cmd.thrust, r.cmd.rotor_torque,
      r.cmd.body_tilt_cmd, r.speeds.n1, r.speeds.n2, r.forces.net_torque,
      r.forces.required_friction, r.forces.normal_force,
      r.forces.max_static_friction, r.power.motor, r.power.servo,
      r.power.total(), r.reference.x, r.reference.y, r.reference.z,
      r.reference_yaw, r.error.x, r.error.y, r.error.z);
  out += buf;
}

struct SummaryAccumulator {
  Vec3 sum_sq;
  Vec3 max_abs;
  double max_overall = 0.0;
  double max_friction_ratio = 0.0;
  double energy = 0.0;
  int slip_steps = 0;
  int rows = 0;

  void add(const TelemetryRow& r, double dt) {
    ++rows;
    const Vec3& e = r.error;
    sum_sq += Vec3{e.x * e.x, e.y * e.y, e.z * e.z};
    max_abs.x = std::max(max_abs.x, std::abs(e.x));
    max_abs.y = std::max(max_abs.y, std::abs(e.y));
    max_abs.z = std::max(max_abs.z, std::abs(e.z));
    max_overall = std::max(max_overall, e.norm());
    energy += r.power.total() * dt;
    if (r.grounded && r.forces.max_static_friction > 0.0) {
      const double ratio = std::abs(r.forces.required_friction) /
                           r.forces.max_static_friction;
      max_friction_ratio = std::max(max_friction_ratio, ratio);
      if (ratio > 1.0) ++slip_steps;
    }
  }

  void fill(RunSummary& s) const {
    if (rows > 0) {
      s.rms_error = {std::sqrt(sum_sq.x / rows), std::sqrt(sum_sq.y / rows),
                     std::sqrt(sum_sq.z / rows)};
    }
    s.max_abs_error = max_abs;
    s.max_overall_error = max_overall;
    s.max_friction_ratio = max_friction_ratio;
    s.energy_joules = energy;
    s.slip_steps = slip_steps;
  }
};

}  // namespace

SlipPolicy slip_policy_from_string(const std::string& s) {
  if (s == "halt") return SlipPolicy::kHalt;
  if (s == "clamp") return SlipPolicy::kClampToMaxFriction;
  if (s == "warn") return SlipPolicy::kWarnAndContinue;
  throw ConfigError("slip_policy must be one of: halt, clamp, warn");
}

const char* slip_policy_name(SlipPolicy p) {
  switch (p) {
    case SlipPolicy::kHalt:
      return "halt";
    case SlipPolicy::kClampToMaxFriction:
      return "clamp";
    case SlipPolicy::kWarnAndContinue:
      return "warn";
  }
  return "?";
}

const char* motion_mode_name(MotionMode m) {
  switch (m) {
    case MotionMode::kAerial:
      return "aerial";
    case MotionMode::kPlanarEnergySaving:
      return "planar-es";
    case MotionMode::kPlanarHighMobility:
      return "planar-hm";
    case MotionMode::kInclined:
      return "inclined";
  }
  return "?";
}

double Rng::uniform() {
  // Top 53 bits to a double in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1) so the log stays finite.
  const double u1 =
      (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  const double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return mag * std::cos(2.0 * kPi * u2);
}

std::optional<Measurement> measure(const VehicleState& s,
                                   const MeasurementNoise& noise, Rng& rng) {
  const double drop = rng.uniform();
  if (drop < noise.dropout_prob) return std::nullopt;
  Measurement m;
  m.position = {s.position.x + noise.position_sigma * rng.gaussian(),
                s.position.y + noise.position_sigma * rng.gaussian(),
                s.position.z + noise.position_sigma * rng.gaussian()};
  m.yaw = wrap_angle(s.yaw + noise.yaw_sigma * rng.gaussian());
  return m;
}

std::string Telemetry::csv_header() {
  return "t,x,y,z,vx,vy,vz,roll,pitch,yaw,roll_rate,pitch_rate,yaw_rate,"
         "mode,alpha,beta,thrust,rotor_torque,tilt_cmd,n1,n2,tau_all,"
         "friction,normal_force,friction_max,P_motor,P_servo,P_total,"
         "ref_x,ref_y,ref_z,ref_yaw,err_x,err_y,err_z\n";
}

std::string Telemetry::to_csv() const {
  std::string out = csv_header();
  out.reserve(out.size() + rows.size() * 320);
  for (const TelemetryRow& r : rows) append_csv_row(out, r);
  return out;
}

std::string RunSummary::to_json() const {
  nlohmann::json j;
  j["completed"] = completed;
  j["halt_reason"] = halt_reason;
  j["steps"] = steps;
  j["duration_s"] = duration;
  j["rms_error"] = {rms_error.x, rms_error.y, rms_error.z};
  j["max_abs_error"] = {max_abs_error.x, max_abs_error.y, max_abs_error.z};
  j["max_overall_error"] = max_overall_error;
  j["max_friction_ratio"] = max_friction_ratio;
  j["energy_joules"] = energy_joules;
  j["progress_m"] = progress;
  j["path_length_m"] = path_length;
  j["slip_steps"] = slip_steps;
  return j.dump(2);
}

Scenario make_scenario(const std::string& name) {
  Scenario s;
  if (name == "hover") {
    s.kind = Scenario::Kind::kHover;
    s.hover_point = {0.0, 0.0, 1.0};
    s.default_duration = 10.0;
    return s;
  }
  if (name == "flight-square") {
    s.kind = Scenario::Kind::kFlightSquare;
    s.path = build_flight_square();
    s.default_duration = s.path.duration() + 2.0;
    return s;
  }
  if (name == "ground-course") {
    s.kind = Scenario::Kind::kGroundCourse;
    GroundCourse course = build_ground_course();
    s.path = course.path;
    s.slope = course.slope;
    s.default_duration = s.path.duration() * 1.5 + 10.0;
    return s;
  }
  if (name == "planar-cruise") {
    s.kind = Scenario::Kind::kPlanarCruise;
    Path p;
    PathSegment seg;
    seg.type = PathSegment::Type::kLine;
    seg.start = {0.5, 2.0, 0.0};
    seg.end = {4.5, 2.0, 0.0};
    seg.speed = 0.05;
    p.segments.push_back(seg);
    s.path = p;
    s.force_mode = GroundMode::kEnergySaving;
    s.default_duration = 20.0;
    return s;
  }
  if (name.rfind("custom:", 0) == 0) {
    const std::string file = name.substr(7);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open path file: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    s.kind = Scenario::Kind::kCustomPath;
    s.path = path_from_json(ss.str());
    s.default_duration = s.path.duration() + 2.0;
    return s;
  }
  throw std::invalid_argument(
      "unknown scenario \"" + name +
      "\"; valid names: hover, flight-square, ground-course, planar-cruise, "
      "custom:<path.json>");
}

namespace {

// ----------------------------------------------------------------------
// Aerial closed loop
// ----------------------------------------------------------------------

SimResult simulate_aerial(const Scenario& scenario,
                          const ControlConfig& control, const ParamSet& params,
                          const SimConfig& cfg) {
  SimResult result;
  RunSummary& summary = result.summary;
  SummaryAccumulator acc;

  auto reference = [&](double t) {
    AerialReference r;
    if (scenario.kind == Scenario::Kind::kHover) {
      r.position = scenario.hover_point;
      return r;
    }
    const PathSample s = reference_at_clamped(scenario.path, t);
    r.position = s.position;
    r.velocity = s.tangent * s.speed;
    r.yaw = bearing(s.tangent);
    return r;
  };

  const double dt = cfg.dt;
  const double duration =
      cfg.duration > 0.0 ? cfg.duration : scenario.default_duration;
  const int steps = static_cast<int>(std::llround(duration / dt));
  const int ctrl_every = std::max(
      1, static_cast<int>(std::llround(1.0 / (cfg.controller_rate * dt))));
  const int meas_every = std::max(
      1, static_cast<int>(std::llround(1.0 / (cfg.noise.rate * dt))));
  const double ctrl_period = ctrl_every * dt;

  AerialController controller(control.aerial, params.vehicle, params.rotor,
                              params.drag.air_density);
  Rng rng(cfg.seed);

  const AerialReference ref0 = reference(0.0);
  VehicleState state;
  state.position = ref0.position;
  state.velocity = ref0.velocity;
  state.yaw = ref0.yaw;

  Vec3 est_position = state.position;
  double est_yaw = state.yaw;
  ActuatorCommand cmd;
  RotorSpeeds speeds;

  summary.path_length =
      scenario.kind == Scenario::Kind::kHover ? 0.0
                                              : scenario.path.total_length();
  result.telemetry.rows.reserve(steps);

  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;

    if (k % meas_every == 0) {
      if (auto m = measure(state, cfg.noise, rng)) {
        est_position = m->position;
        est_yaw = m->yaw;
      }
    }
    if (k % ctrl_every == 0) {
      VehicleState est = state;
      est.position = est_position;
      est.yaw = est_yaw;
      cmd = controller.update(est, reference(t), ctrl_period);
      speeds = controller.rotor_speeds();
    }

    TelemetryRow row;
    row.t = t;
    row.state = state;
    row.cmd = cmd;
    row.speeds = speeds;
    row.mode = MotionMode::kAerial;
    row.grounded = false;
    row.power.motor =
        params.vehicle.motor_power_coeff * cmd.thrust * cmd.thrust;
    const AerialReference ref = reference(t);
    row.reference = ref.position;
    row.reference_yaw = ref.yaw;
    row.error = state.position - ref.position;
    result.telemetry.rows.push_back(row);
    acc.add(row, dt);

    auto rhs = [&](double tt, const VehicleState& s) {
      (void)tt;
      return aerial_derivative(s, cmd, params.vehicle, params.drag).derivative;
    };
    const DerivativeResult probe =
        aerial_derivative(state, cmd, params.vehicle, params.drag);
    if (probe.status == DynamicsStatus::kSingularAttitude) {
      summary.halt_reason = "SingularAttitude";
      result.exit_code = 2;
      break;
    }
    state = rk4_step_state(rhs, t, state, dt);
    if (!finite_state(state)) {
      summary.halt_reason =
          "NumericalDivergence at step " + std::to_string(k + 1);
      result.exit_code = 3;
      break;
    }
  }

  summary.steps = static_cast<int>(result.telemetry.rows.size());
  summary.duration = summary.steps * dt;
  summary.completed = summary.halt_reason.empty();
  acc.fill(summary);
  if (scenario.kind != Scenario::Kind::kHover) {
    summary.progress = project_progress(scenario.path, state.position,
                                        0.0, summary.path_length + 1.0);
  }
  return result;
}

// ----------------------------------------------------------------------
// Ground closed loop
// ----------------------------------------------------------------------

// Reduced ground state: the rolling constraint pins the velocity to the
// heading, so integrate [x, y, z, yaw, v, theta, yaw_rate] instead of the
// full 12-state. theta follows the tilt servo as a rate-limited first-order
// tracker; in energy-saving mode the motor pitch is slaved to -theta so the
// rotor plane stays level between controller ticks.
struct GroundStep {
  double gamma = 0.0;
  ActuatorCommand cmd;
  bool energy_saving = false;
  SlipPolicy policy = SlipPolicy::kClampToMaxFriction;
};

std::array<double, 7> ground_rhs(const std::array<double, 7>& y,
                                 const GroundStep& gs, const ParamSet& params) {
  const VehicleParams& p = params.vehicle;
  const double yaw = y[3], v = y[4], theta = y[5], yaw_rate = y[6];
  const double beta = gs.energy_saving ? -theta : gs.cmd.motor_pitch;
  const double thrust = gs.cmd.thrust;
  const double gamma = gs.gamma;

  DerivativeResult forces =
      gamma == 0.0
          ? planar_ground_forces(thrust, beta, theta,
                                 planar_net_torque(thrust, beta, theta, p), p)
          : inclined_ground_forces(thrust, beta, theta, gamma, p);

  double along = 0.0;
  if (forces.status != DynamicsStatus::kLiftOff) {
    along = p.cage_radius / p.J_yy * forces.ground.net_torque;
    if (forces.status == DynamicsStatus::kSlipDetected &&
        gs.policy == SlipPolicy::kClampToMaxFriction) {
      // Friction saturates: the heading force balance is integrated with
      // the clamped friction instead of the no-slip coupling.
      const double f = std::copysign(forces.ground.max_static_friction,
                                     forces.ground.required_friction);
      along = (f + thrust * std::sin(beta - theta) -
               p.weight() * std::sin(gamma)) /
              p.total_mass;
    }
  }

  double tau_fz = -params.drag.k_tau_z * yaw_rate * std::abs(yaw_rate);
  if (yaw_rate > 0.0) tau_fz -= params.drag.rolling_resistance_torque;
  if (yaw_rate < 0.0) tau_fz += params.drag.rolling_resistance_torque;
  const double tau_p = gamma == 0.0 ? gs.cmd.rotor_torque : 0.0;
  const double yaw_acc =
      (tau_fz * std::cos(theta) + tau_p * std::cos(beta + theta)) / p.J_zz;

  return {v * std::cos(gamma) * std::cos(yaw),
          v * std::cos(gamma) * std::sin(yaw),
          v * std::sin(gamma),
          yaw_rate,
          along,
          0.0,  // theta rate is filled by the caller (servo model)
          yaw_acc};
}

SimResult simulate_ground(const Scenario& scenario,
                          const ControlConfig& control, const ParamSet& params,
                          const SimConfig& cfg) {
  SimResult result;
  RunSummary& summary = result.summary;
  SummaryAccumulator acc;
  const VehicleParams& p = params.vehicle;
  const GroundGains& gains = control.ground;

  const double dt = cfg.dt;
  const double duration =
      cfg.duration > 0.0 ? cfg.duration : scenario.default_duration;
  const int steps = static_cast<int>(std::llround(duration / dt));
  const int ctrl_every = std::max(
      1, static_cast<int>(std::llround(1.0 / (cfg.controller_rate * dt))));
  const int meas_every = std::max(
      1, static_cast<int>(std::llround(1.0 / (cfg.noise.rate * dt))));
  const double ctrl_period = ctrl_every * dt;

  EnergySavingController es(gains, p, params.rotor, params.drag.air_density);
  HighMobilityController hm(gains, p, params.rotor, params.drag.air_density);
  Rng rng(cfg.seed);

  const Path& path = scenario.path;
  const PathSample start = sample_at_arclength(path, 0.0);
  const double total = path.total_length();
  summary.path_length = total;

  // State: x, y, z, yaw, v, theta, yaw_rate.
  std::array<double, 7> y{start.position.x, start.position.y,
                          start.position.z, bearing(start.tangent),
                          0.0,              0.0,
                          0.0};
  if (scenario.kind == Scenario::Kind::kGroundCourse) y[4] = start.speed;

  double s_proj = 0.0;
  Vec3 est_position = start.position;
  double est_yaw = y[3];
  GroundStep gs;
  gs.policy = cfg.slip_policy;
  GroundMode mode = scenario.force_mode.value_or(GroundMode::kEnergySaving);
  RotorSpeeds speeds;
  double t_elapsed = 0.0;

  auto reconstruct = [&](const std::array<double, 7>& ya) {
    VehicleState s;
    s.position = {ya[0], ya[1], ya[2]};
    const double cg = std::cos(gs.gamma), sg = std::sin(gs.gamma);
    s.velocity = {ya[4] * cg * std::cos(ya[3]), ya[4] * cg * std::sin(ya[3]),
                  ya[4] * sg};
    s.yaw = ya[3];
    s.pitch = ya[5];
    s.yaw_rate = ya[6];
    return s;
  };

  result.telemetry.rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    t_elapsed = t;

    VehicleState state = reconstruct(y);
    if (k % meas_every == 0) {
      if (auto m = measure(state, cfg.noise, rng)) {
        est_position = m->position;
        est_yaw = m->yaw;
      }
    }

    if (k % ctrl_every == 0) {
      VehicleState est = state;
      est.position.x = est_position.x;
      est.position.y = est_position.y;
      est.yaw = est_yaw;

      s_proj = project_progress(path, est.position, s_proj,
                                std::max(0.05, 2.0 * ctrl_period));
      gs.gamma = scenario.slope.gamma_at(s_proj);
      const PathSample target =
          look_ahead_target(path, est.position, s_proj, gains.look_ahead);
      GroundSetpoint sp = ground_transform(est, target.position,
                                           bearing(target.tangent),
                                           target.speed);
      if (s_proj >= total - 0.05) sp.heading_speed = 0.0;  // hold at the end

      const double v_est =
          (est.velocity.x * std::cos(est.yaw) +
           est.velocity.y * std::sin(est.yaw)) *
              std::cos(gs.gamma) +
          est.velocity.z * std::sin(gs.gamma);
      const double a_des =
          (sp.heading_speed - v_est) / std::max(gains.accel_horizon, 1e-3);
      mode = scenario.force_mode.value_or(
          select_ground_mode(a_des, gs.gamma, p, mode));
      if (gs.gamma != 0.0) mode = GroundMode::kHighMobility;

      if (mode == GroundMode::kEnergySaving) {
        gs.cmd = es.update(est, sp, ctrl_period);
        gs.energy_saving = true;
        speeds = es.rotor_speeds();
      } else {
        gs.cmd = hm.update(est, sp, gs.gamma, ctrl_period);
        gs.energy_saving = false;
        speeds = hm.rotor_speeds();
      }
    }

    // Constraint supervision at the pre-step state.
    const double beta_now = gs.energy_saving ? -y[5] : gs.cmd.motor_pitch;
    DerivativeResult forces =
        gs.gamma == 0.0
            ? planar_ground_forces(
                  gs.cmd.thrust, beta_now, y[5],
                  planar_net_torque(gs.cmd.thrust, beta_now, y[5], p), p)
            : inclined_ground_forces(gs.cmd.thrust, beta_now, y[5], gs.gamma,
                                     p);

    TelemetryRow row;
    row.t = t;
    row.state = state;
    row.cmd = gs.cmd;
    row.cmd.motor_pitch = beta_now;
    row.speeds = speeds;
    row.grounded = true;
    row.mode = gs.gamma != 0.0 ? MotionMode::kInclined
               : (mode == GroundMode::kEnergySaving
                      ? MotionMode::kPlanarEnergySaving
                      : MotionMode::kPlanarHighMobility);
    row.forces = forces.ground;
    row.power = power(gs.cmd.thrust, y[5], std::abs(y[4]), p);
    const PathSample ref = reference_at_clamped(path, t);
    row.reference = ref.position;
    row.reference_yaw = bearing(ref.tangent);
    row.error = state.position - ref.position;
    result.telemetry.rows.push_back(row);
    acc.add(row, dt);

    if (forces.status == DynamicsStatus::kLiftOff) {
      summary.halt_reason = "LiftOff";
      result.exit_code = 2;
      break;
    }
    if (forces.status == DynamicsStatus::kSlipDetected &&
        gs.policy == SlipPolicy::kHalt) {
      summary.halt_reason = "SlipDetected";
      result.exit_code = 2;
      break;
    }

    auto rhs = [&](double tt, const std::array<double, 7>& ya) {
      (void)tt;
      std::array<double, 7> dydt = ground_rhs(ya, gs, params);
      // Tilt servo: rate-limited first-order tracking of the commanded tilt.
      const double err = gs.cmd.body_tilt_cmd - ya[5];
      dydt[5] = std::clamp(gains.servo_gain * err, -gains.servo_rate_limit,
                           gains.servo_rate_limit);
      return dydt;
    };
    y = rk4_step(rhs, t, y, dt);
    y[3] = wrap_angle(y[3]);

    bool finite = true;
    for (double v : y)
      if (!std::isfinite(v)) finite = false;
    if (!finite) {
      summary.halt_reason =
          "NumericalDivergence at step " + std::to_string(k + 1);
      result.exit_code = 3;
      break;
    }
  }

  summary.steps = static_cast<int>(result.telemetry.rows.size());
  summary.duration = summary.steps * dt;
  summary.progress =
      project_progress(path, {y[0], y[1], y[2]}, s_proj, total + 1.0);
  summary.completed =
      summary.halt_reason.empty() && summary.progress >= total - 0.25;
  acc.fill(summary);
  (void)t_elapsed;
  return result;
}

}  // namespace

SimResult simulate(const Scenario& scenario, const ControlConfig& control,
                   const ParamSet& params, const SimConfig& cfg) {
  if (cfg.dt <= 0.0) throw ConfigError("dt must be > 0");
  const double duration =
      cfg.duration > 0.0 ? cfg.duration : scenario.default_duration;
  if (duration < cfg.dt) throw ConfigError("duration must be >= dt");
  if (scenario.aerial()) {
    if (!control.has_aerial)
      throw IncompatibleModeError("aerial scenario needs aerial gains");
    return simulate_aerial(scenario, control, params, cfg);
  }
  if (!control.has_ground)
    throw IncompatibleModeError("ground scenario needs ground gains");
  return simulate_ground(scenario, control, params, cfg);
}

SimConfig load_sim_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("sim config parse failed: ") + e.what());
  }
  SimConfig cfg;
  cfg.dt = doc.value("dt", 0.001);
  cfg.duration = doc.value("duration", 0.0);
  cfg.controller_rate = doc.value("controller_rate", 250.0);
  cfg.seed = doc.value("seed", std::uint64_t{1});
  if (doc.contains("slip_policy"))
    cfg.slip_policy =
        slip_policy_from_string(doc.at("slip_policy").get<std::string>());
  if (doc.contains("noise")) {
    const auto& n = doc.at("noise");
    cfg.noise.position_sigma = n.value("position_sigma", 0.0);
    cfg.noise.yaw_sigma = n.value("yaw_sigma", 0.0);
    cfg.noise.dropout_prob = n.value("dropout_prob", 0.0);
    cfg.noise.rate = n.value("rate", 250.0);
  }
  if (cfg.dt <= 0.0) throw ValidationError("dt > 0");
  if (cfg.controller_rate <= 0.0) throw ValidationError("controller_rate > 0");
  if (cfg.noise.rate <= 0.0) throw ValidationError("noise.rate > 0");
  if (cfg.noise.position_sigma < 0.0 || cfg.noise.yaw_sigma < 0.0)
    throw ValidationError("noise sigmas >= 0");
  if (cfg.noise.dropout_prob < 0.0 || cfg.noise.dropout_prob > 1.0)
    throw ValidationError("dropout_prob in [0, 1]");
  return cfg;
}

SimConfig load_sim_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sim config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_sim_config(ss.str());
}

}  // namespace tiltcage
