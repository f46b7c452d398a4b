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

#include "tiltcage/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tiltcage/errors.hpp"

namespace tiltcage {
namespace {

using nlohmann::json;

double require(const json& obj, const std::string& section,
               const std::string& key) {
  if (!obj.contains(key)) throw MissingKeyError(section + "." + key);
  if (!obj.at(key).is_number())
    throw ParseError("key " + section + "." + key + " is not a number");
  return obj.at(key).get<double>();
}

double optional(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  return obj.at(key).get<double>();
}

}  // namespace

ParamSet load_params(const std::string& config_text) {
  json doc;
  try {
    doc = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse failed: ") + e.what());
  }

  if (!doc.contains("vehicle")) throw MissingKeyError("vehicle");
  const json& v = doc.at("vehicle");

  std::string unit = doc.value("angle_unit", std::string("rad"));
  if (unit != "rad" && unit != "deg")
    throw ValidationError("angle_unit must be \"deg\" or \"rad\"");
  const double to_rad = (unit == "deg") ? kPi / 180.0 : 1.0;

  ParamSet p;
  VehicleParams& veh = p.vehicle;
  veh.total_mass = require(v, "vehicle", "total_mass");
  veh.tilt_mechanism_mass = require(v, "vehicle", "tilt_mechanism_mass");
  veh.gravity = require(v, "vehicle", "gravity");
  veh.cage_radius = require(v, "vehicle", "cage_radius");
  veh.centroid_offset = require(v, "vehicle", "centroid_offset");
  veh.motor_power_coeff = require(v, "vehicle", "motor_power_coeff");
  veh.static_friction_coeff = require(v, "vehicle", "static_friction_coeff");
  veh.J_yy = require(v, "vehicle", "J_yy");
  veh.J_xx = optional(v, "J_xx", veh.J_yy);
  veh.J_zz = optional(v, "J_zz", veh.J_yy);
  veh.theta_min = require(v, "vehicle", "theta_min") * to_rad;
  veh.theta_max = require(v, "vehicle", "theta_max") * to_rad;
  veh.beta_min = require(v, "vehicle", "beta_min") * to_rad;
  veh.beta_max = require(v, "vehicle", "beta_max") * to_rad;
  // Motor roll limits default to the pitch limits (same servo stroke).
  veh.alpha_min = v.contains("alpha_min")
                      ? v.at("alpha_min").get<double>() * to_rad
                      : veh.beta_min;
  veh.alpha_max = v.contains("alpha_max")
                      ? v.at("alpha_max").get<double>() * to_rad
                      : veh.beta_max;
  veh.F_min = require(v, "vehicle", "F_min");
  veh.F_max = require(v, "vehicle", "F_max");

  DragParams& drag = p.drag;
  if (doc.contains("drag")) {
    const json& d = doc.at("drag");
    drag.drag_coefficient = optional(d, "drag_coefficient", 1.0);
    drag.air_density = optional(d, "air_density", 1.225);
    drag.frontal_area = optional(d, "frontal_area",
                                 kPi * veh.cage_radius * veh.cage_radius);
    drag.k_tau_x = optional(d, "k_tau_x", 2.0e-4);
    drag.k_tau_y = optional(d, "k_tau_y", 2.0e-4);
    drag.k_tau_z = optional(d, "k_tau_z", 2.0e-4);
    drag.rolling_resistance_torque =
        optional(d, "rolling_resistance_torque", 0.0);
  } else {
    drag.frontal_area = kPi * veh.cage_radius * veh.cage_radius;
  }

  RotorParams& rotor = p.rotor;
  if (doc.contains("rotor")) {
    const json& r = doc.at("rotor");
    rotor.torque_coeff = optional(r, "torque_coeff", 0.02);
    rotor.disc_diameter = optional(r, "disc_diameter", 0.18);
    rotor.max_rotor_speed = optional(r, "max_rotor_speed", 280.0);
    // Calibrated so both rotors at n_max give exactly F_max.
    double calibrated = veh.F_max / (drag.air_density * 2.0 *
                                     rotor.max_rotor_speed *
                                     rotor.max_rotor_speed);
    rotor.thrust_coeff = optional(r, "thrust_coeff", calibrated);
  } else {
    rotor.thrust_coeff = veh.F_max / (drag.air_density * 2.0 *
                                      rotor.max_rotor_speed *
                                      rotor.max_rotor_speed);
  }

  std::vector<std::string> violations =
      validate_params(p.vehicle, p.drag, p.rotor);
  if (!violations.empty()) {
    std::string msg = "invalid parameters:";
    for (const std::string& s : violations) msg += " [" + s + "]";
    throw ValidationError(msg);
  }
  return p;
}

ParamSet load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_params(ss.str());
}

std::string params_to_json(const ParamSet& p) {
  json doc;
  doc["angle_unit"] = "rad";
  json& v = doc["vehicle"];
  v["total_mass"] = p.vehicle.total_mass;
  v["tilt_mechanism_mass"] = p.vehicle.tilt_mechanism_mass;
  v["gravity"] = p.vehicle.gravity;
  v["cage_radius"] = p.vehicle.cage_radius;
  v["centroid_offset"] = p.vehicle.centroid_offset;
  v["motor_power_coeff"] = p.vehicle.motor_power_coeff;
  v["static_friction_coeff"] = p.vehicle.static_friction_coeff;
  v["J_xx"] = p.vehicle.J_xx;
  v["J_yy"] = p.vehicle.J_yy;
  v["J_zz"] = p.vehicle.J_zz;
  v["theta_min"] = p.vehicle.theta_min;
  v["theta_max"] = p.vehicle.theta_max;
  v["beta_min"] = p.vehicle.beta_min;
  v["beta_max"] = p.vehicle.beta_max;
  v["alpha_min"] = p.vehicle.alpha_min;
  v["alpha_max"] = p.vehicle.alpha_max;
  v["F_min"] = p.vehicle.F_min;
  v["F_max"] = p.vehicle.F_max;
  json& d = doc["drag"];
  d["drag_coefficient"] = p.drag.drag_coefficient;
  d["air_density"] = p.drag.air_density;
  d["frontal_area"] = p.drag.frontal_area;
  d["k_tau_x"] = p.drag.k_tau_x;
  d["k_tau_y"] = p.drag.k_tau_y;
  d["k_tau_z"] = p.drag.k_tau_z;
  d["rolling_resistance_torque"] = p.drag.rolling_resistance_torque;
  json& r = doc["rotor"];
  r["thrust_coeff"] = p.rotor.thrust_coeff;
  r["torque_coeff"] = p.rotor.torque_coeff;
  r["disc_diameter"] = p.rotor.disc_diameter;
  r["max_rotor_speed"] = p.rotor.max_rotor_speed;
  return doc.dump(2);
}

std::vector<std::string> validate_params(const VehicleParams& v,
                                         const DragParams& d,
                                         const RotorParams& r) {
  std::vector<std::string> out;
  auto check = [&out](bool ok, const char* name) {
    if (!ok) out.emplace_back(name);
  };

  check(v.tilt_mechanism_mass > 0.0, "m > 0");
  check(v.total_mass > v.tilt_mechanism_mass, "M > m");
  check(v.gravity > 0.0, "g > 0");
  check(v.cage_radius > 0.0, "r > 0");
  check(v.centroid_offset > 0.0, "l > 0");
  check(v.J_xx > 0.0, "J_xx > 0");
  check(v.J_yy > 0.0, "J_yy > 0");
  check(v.J_zz > 0.0, "J_zz > 0");
  check(v.theta_min < v.theta_max, "theta_min < theta_max");
  check(v.beta_min < v.beta_max, "beta_min < beta_max");
  check(v.alpha_min < v.alpha_max, "alpha_min < alpha_max");
  check(v.F_min >= 0.0, "F_min >= 0");
  check(v.F_min < v.F_max, "F_min < F_max");
  check(v.static_friction_coeff >= 0.0, "mu >= 0");

  check(d.drag_coefficient >= 0.0, "C_d >= 0");
  check(d.air_density >= 0.0, "rho >= 0");
  check(d.frontal_area >= 0.0, "A >= 0");
  check(d.k_tau_x >= 0.0, "k_tau_x >= 0");
  check(d.k_tau_y >= 0.0, "k_tau_y >= 0");
  check(d.k_tau_z >= 0.0, "k_tau_z >= 0");
  check(d.rolling_resistance_torque >= 0.0, "rolling_resistance_torque >= 0");

  check(r.thrust_coeff > 0.0, "C_T > 0");
  check(r.torque_coeff > 0.0, "C_p > 0");
  check(r.disc_diameter > 0.0, "D > 0");
  check(r.max_rotor_speed > 0.0, "n_max > 0");
  // Both rotors at n_max must be able to reach the configured F_max.
  check(r.thrust_coeff * d.air_density * 2.0 * r.max_rotor_speed *
                r.max_rotor_speed >=
            v.F_max - 1e-9,
        "C_T*rho*2*n_max^2 >= F_max");
  return out;
}

}  // namespace tiltcage
