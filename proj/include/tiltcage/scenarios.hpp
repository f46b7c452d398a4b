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
// Reference trajectory generators sized for a 5 m x 4 m indoor test area,
// slope geometry for the ground course, arc-length/time sampling, and
// tracking-error metrics.

#ifndef TILTCAGE_SCENARIOS_HPP_
#define TILTCAGE_SCENARIOS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "tiltcage/math.hpp"

namespace tiltcage {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PathSegment {
  enum class Type { kLine, kArc };
  Type type = Type::kLine;
  Vec3 start;          // line start or arc start point
  Vec3 end;            // line end (lines only)
  Vec3 center;         // arc center at the arc's altitude (arcs only)
  double radius = 0.0;
  double start_angle = 0.0;  // angle of the start point about the center
  double sweep = 0.0;        // signed sweep [rad]; positive = CCW
  double speed = 0.5;        // nominal speed on this segment [m/s]

  double length() const;
};

struct PathSample {
  Vec3 position;
  Vec3 tangent;          // unit, horizontal for arcs
  double speed = 0.0;
  double arc_position = 0.0;  // distance from the path start [m]
};

// An ordered chain of lines and arcs. Construction validates position
// continuity between consecutive segments (1e-6 m).
struct Path {
  std::vector<PathSegment> segments;
  bool closed = false;

  double total_length() const;
  double duration() const;  // at the per-segment nominal speeds
};

void validate_path(const Path& p);

// Sample by elapsed time at the nominal speeds. Throws std::out_of_range
// outside [0, duration].
PathSample reference_at(const Path& p, double t);

// Same, but holding the end point (speed 0) beyond the duration.
PathSample reference_at_clamped(const Path& p, double t);

PathSample sample_at_arclength(const Path& p, double s);

// Advances a progress estimate to the arc position nearest `pos` within
// [s_hint, s_hint + window]; progress never moves backwards.
double project_progress(const Path& p, const Vec3& pos, double s_hint,
                        double window);

// First point at (or beyond) chord distance `look_ahead` from `pos`,
// searching forward of s_from; falls back to the path end.
PathSample look_ahead_target(const Path& p, const Vec3& pos, double s_from,
                             double look_ahead);

// Piecewise-constant surface inclination along arc position, with the
// integrated height map.
struct SlopeProfile {
  struct Piece {
    double length = 0.0;
    double gamma = 0.0;  // [rad], positive = climbing
  };
  std::vector<Piece> pieces;

  double gamma_at(double s) const;
  double height_at(double s) const;  // integral of sin(gamma)
  double total_length() const;
};

// Closed flight circuit: a rectangle filling the test area with 0.5 m
// margin, corner fillets of `arc_radius_large` at the second and third
// corners and `arc_radius_small` at the fourth; the first corner is the
// start/finish and is never flown through. Constant altitude.
Path build_flight_square(double arc_radius_large = 1.0,
                         double arc_radius_small = 0.3,
                         double side_speed = 0.5, double altitude = 1.0);

struct GroundCourse {
  Path path;
  SlopeProfile slope;  // aligned with the path arc-length
};

// 2.5 m straight, 1 m-radius semicircle, then the ramp: 0.706 m up at
// 12.5 deg, 0.9 m flat top, 0.344 m down at 25 deg, and a short run-out.
GroundCourse build_ground_course(double speed = 0.2);

struct ErrorReport {
  std::vector<double> t;
  std::vector<Vec3> error;  // per-axis tracking error series
  Vec3 rms;
  Vec3 max_abs;
  double max_overall = 0.0;  // largest Euclidean deviation
};

// Per-axis errors of a recorded position series against the time-matched
// path reference.
ErrorReport error_report(const std::vector<double>& times,
                         const std::vector<Vec3>& positions, const Path& p);

// Round-trip path serialization for reproducible custom scenarios.
std::string path_to_json(const Path& p);
Path path_from_json(const std::string& text);

}  // namespace tiltcage

#endif  // TILTCAGE_SCENARIOS_HPP_
