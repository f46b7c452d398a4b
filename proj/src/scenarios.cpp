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

#include "tiltcage/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace tiltcage {
namespace {

constexpr double kJoinTolerance = 1e-6;

Vec3 arc_point(const PathSegment& seg, double angle) {
  return {seg.center.x + seg.radius * std::cos(angle),
          seg.center.y + seg.radius * std::sin(angle), seg.center.z};
}

Vec3 segment_end(const PathSegment& seg) {
  if (seg.type == PathSegment::Type::kLine) return seg.end;
  return arc_point(seg, seg.start_angle + seg.sweep);
}

PathSample sample_segment(const PathSegment& seg, double s_local,
                          double s_global) {
  PathSample out;
  out.speed = seg.speed;
  out.arc_position = s_global;
  const double len = seg.length();
  const double u = len > 0.0 ? std::clamp(s_local / len, 0.0, 1.0) : 0.0;
  if (seg.type == PathSegment::Type::kLine) {
    const Vec3 d = seg.end - seg.start;
    out.position = seg.start + d * u;
    out.tangent = len > 0.0 ? d / len : Vec3{1.0, 0.0, 0.0};
  } else {
    const double angle = seg.start_angle + seg.sweep * u;
    out.position = arc_point(seg, angle);
    const double dir = seg.sweep >= 0.0 ? 1.0 : -1.0;
    out.tangent = {-dir * std::sin(angle), dir * std::cos(angle), 0.0};
  }
  return out;
}

}  // namespace

double PathSegment::length() const {
  if (type == Type::kLine) return (end - start).norm();
  return std::abs(sweep) * radius;
}

double Path::total_length() const {
  double sum = 0.0;
  for (const PathSegment& s : segments) sum += s.length();
  return sum;
}

double Path::duration() const {
  double sum = 0.0;
  for (const PathSegment& s : segments) sum += s.length() / s.speed;
  return sum;
}

void validate_path(const Path& p) {
  if (p.segments.empty()) throw GeometryError("path has no segments");
  for (const PathSegment& s : p.segments) {
    if (s.length() <= 0.0) throw GeometryError("zero-length path segment");
    if (s.speed <= 0.0) throw GeometryError("non-positive segment speed");
    if (s.type == PathSegment::Type::kArc && s.radius <= 0.0)
      throw GeometryError("non-positive arc radius");
  }
  for (std::size_t i = 0; i + 1 < p.segments.size(); ++i) {
    const Vec3 gap = segment_end(p.segments[i]) - p.segments[i + 1].start;
    if (gap.norm() > kJoinTolerance)
      throw GeometryError("path segments are not position-continuous");
  }
}

PathSample reference_at(const Path& p, double t) {
  if (t < 0.0 || t > p.duration() + 1e-12)
    throw std::out_of_range("reference time outside [0, duration]");
  return reference_at_clamped(p, t);
}

PathSample reference_at_clamped(const Path& p, double t) {
  double s_global = 0.0;
  double elapsed = 0.0;
  for (const PathSegment& seg : p.segments) {
    const double seg_time = seg.length() / seg.speed;
    if (t <= elapsed + seg_time || &seg == &p.segments.back()) {
      const double dt = std::clamp(t - elapsed, 0.0, seg_time);
      PathSample out = sample_segment(seg, dt * seg.speed,
                                      s_global + dt * seg.speed);
      if (t > p.duration()) out.speed = 0.0;  // hold the end point
      return out;
    }
    elapsed += seg_time;
    s_global += seg.length();
  }
  throw std::out_of_range("empty path");
}

PathSample sample_at_arclength(const Path& p, double s) {
  const double total = p.total_length();
  s = std::clamp(s, 0.0, total);
  double s_global = 0.0;
  for (const PathSegment& seg : p.segments) {
    if (s <= s_global + seg.length() || &seg == &p.segments.back()) {
      return sample_segment(seg, s - s_global, s);
    }
    s_global += seg.length();
  }
  throw std::out_of_range("empty path");
}

double project_progress(const Path& p, const Vec3& pos, double s_hint,
                        double window) {
  constexpr double kStep = 0.005;
  const double total = p.total_length();
  double best_s = std::clamp(s_hint, 0.0, total);
  double best_d = (sample_at_arclength(p, best_s).position - pos).norm_sq();
  for (double s = best_s; s <= std::min(total, s_hint + window); s += kStep) {
    const double d = (sample_at_arclength(p, s).position - pos).norm_sq();
    if (d < best_d) {
      best_d = d;
      best_s = s;
    }
  }
  return best_s;
}

PathSample look_ahead_target(const Path& p, const Vec3& pos, double s_from,
                             double look_ahead) {
  constexpr double kStep = 0.005;
  const double total = p.total_length();
  for (double s = s_from; s < total; s += kStep) {
    PathSample sample = sample_at_arclength(p, s);
    if ((sample.position - pos).norm() >= look_ahead) return sample;
  }
  return sample_at_arclength(p, total);
}

double SlopeProfile::gamma_at(double s) const {
  double acc = 0.0;
  for (const Piece& piece : pieces) {
    if (s < acc + piece.length) return piece.gamma;
    acc += piece.length;
  }
  return pieces.empty() ? 0.0 : pieces.back().gamma;
}

double SlopeProfile::height_at(double s) const {
  double acc = 0.0, h = 0.0;
  for (const Piece& piece : pieces) {
    const double run = std::clamp(s - acc, 0.0, piece.length);
    h += run * std::sin(piece.gamma);
    acc += piece.length;
    if (s <= acc) break;
  }
  return h;
}

double SlopeProfile::total_length() const {
  double sum = 0.0;
  for (const Piece& piece : pieces) sum += piece.length;
  return sum;
}

Path build_flight_square(double arc_radius_large, double arc_radius_small,
                         double side_speed, double altitude) {
  if (arc_radius_large <= 0.0 || arc_radius_small <= 0.0)
    throw GeometryError("corner fillet radius must be positive");
  if (side_speed <= 0.0) throw GeometryError("speed must be positive");

  // Rectangle inside the 5 m x 4 m test area with 0.5 m margin; the run
  // starts and ends at the first corner.
  const double x0 = 0.5, x1 = 4.5, y0 = 0.5, y1 = 3.5;
  const double rl = arc_radius_large, rs = arc_radius_small;
  if (rl * 2.0 >= x1 - x0 || rl * 2.0 >= y1 - y0 || rl + rs >= y1 - y0)
    throw GeometryError("corner fillets overlap");

  const double z = altitude;
  Path p;
  p.closed = true;
  auto line = [&](Vec3 a, Vec3 b) {
    PathSegment s;
    s.type = PathSegment::Type::kLine;
    s.start = a;
    s.end = b;
    s.speed = side_speed;
    p.segments.push_back(s);
  };
  auto corner = [&](Vec3 center, double radius, double start_angle) {
    PathSegment s;
    s.type = PathSegment::Type::kArc;
    s.center = center;
    s.radius = radius;
    s.start_angle = start_angle;
    s.sweep = -kPi / 2.0;  // every turn of the circuit is clockwise
    s.start = arc_point(s, start_angle);
    s.speed = side_speed;
    p.segments.push_back(s);
  };

  line({x0, y0, z}, {x0, y1 - rl, z});
  corner({x0 + rl, y1 - rl, z}, rl, kPi);
  line({x0 + rl, y1, z}, {x1 - rl, y1, z});
  corner({x1 - rl, y1 - rl, z}, rl, kPi / 2.0);
  line({x1, y1 - rl, z}, {x1, y0 + rs, z});
  corner({x1 - rs, y0 + rs, z}, rs, 0.0);
  line({x1 - rs, y0, z}, {x0, y0, z});

  validate_path(p);
  return p;
}

GroundCourse build_ground_course(double speed) {
  if (speed <= 0.0) throw GeometryError("speed must be positive");

  const double climb_len = 0.706, climb_gamma = deg2rad(12.5);
  const double top_len = 0.9;
  const double drop_len = 0.344, drop_gamma = deg2rad(-25.0);
  const double runout_len = 0.5;

  GroundCourse course;
  Path& p = course.path;
  auto line = [&](Vec3 a, Vec3 b) {
    PathSegment s;
    s.type = PathSegment::Type::kLine;
    s.start = a;
    s.end = b;
    s.speed = speed;
    p.segments.push_back(s);
  };

  // 2.5 m straight east, then a half circle turning back west.
  line({0.5, 0.75, 0.0}, {3.0, 0.75, 0.0});
  PathSegment arc;
  arc.type = PathSegment::Type::kArc;
  arc.center = {3.0, 1.75, 0.0};
  arc.radius = 1.0;
  arc.start_angle = -kPi / 2.0;
  arc.sweep = kPi;
  arc.start = arc_point(arc, arc.start_angle);
  arc.speed = speed;
  p.segments.push_back(arc);

  // Ramp along -x: up the gentle side, across the top, down the steep side.
  Vec3 at{3.0, 2.75, 0.0};
  auto ramp = [&](double length, double gamma) {
    Vec3 next = at + Vec3{-length * std::cos(gamma), 0.0,
                          length * std::sin(gamma)};
    line(at, next);
    at = next;
  };
  ramp(climb_len, climb_gamma);
  ramp(top_len, 0.0);
  ramp(drop_len, drop_gamma);
  ramp(runout_len, 0.0);

  validate_path(p);

  const double flat_len = p.segments[0].length() + p.segments[1].length();
  course.slope.pieces = {{flat_len, 0.0},
                         {climb_len, climb_gamma},
                         {top_len, 0.0},
                         {drop_len, drop_gamma},
                         {runout_len, 0.0}};
  return course;
}

ErrorReport error_report(const std::vector<double>& times,
                         const std::vector<Vec3>& positions, const Path& p) {
  ErrorReport out;
  const std::size_t n = std::min(times.size(), positions.size());
  out.t.reserve(n);
  out.error.reserve(n);
  Vec3 sum_sq;
  for (std::size_t i = 0; i < n; ++i) {
    const PathSample ref = reference_at_clamped(p, times[i]);
    const Vec3 e = positions[i] - ref.position;
    out.t.push_back(times[i]);
    out.error.push_back(e);
    sum_sq += Vec3{e.x * e.x, e.y * e.y, e.z * e.z};
    out.max_abs.x = std::max(out.max_abs.x, std::abs(e.x));
    out.max_abs.y = std::max(out.max_abs.y, std::abs(e.y));
    out.max_abs.z = std::max(out.max_abs.z, std::abs(e.z));
    out.max_overall = std::max(out.max_overall, e.norm());
  }
  if (n > 0) {
    out.rms = {std::sqrt(sum_sq.x / n), std::sqrt(sum_sq.y / n),
               std::sqrt(sum_sq.z / n)};
  }
  return out;
}

std::string path_to_json(const Path& p) {
  nlohmann::json doc;
  doc["closed"] = p.closed;
  doc["segments"] = nlohmann::json::array();
  for (const PathSegment& s : p.segments) {
    nlohmann::json j;
    j["type"] = s.type == PathSegment::Type::kLine ? "line" : "arc";
    j["speed"] = s.speed;
    if (s.type == PathSegment::Type::kLine) {
      j["start"] = {s.start.x, s.start.y, s.start.z};
      j["end"] = {s.end.x, s.end.y, s.end.z};
    } else {
      j["center"] = {s.center.x, s.center.y, s.center.z};
      j["radius"] = s.radius;
      j["start_angle"] = s.start_angle;
      j["sweep"] = s.sweep;
    }
    doc["segments"].push_back(j);
  }
  return doc.dump(2);
}

Path path_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  Path p;
  p.closed = doc.value("closed", false);
  for (const auto& j : doc.at("segments")) {
    PathSegment s;
    const std::string type = j.at("type").get<std::string>();
    s.speed = j.value("speed", 0.5);
    if (type == "line") {
      s.type = PathSegment::Type::kLine;
      auto a = j.at("start"), b = j.at("end");
      s.start = {a[0], a[1], a[2]};
      s.end = {b[0], b[1], b[2]};
    } else if (type == "arc") {
      s.type = PathSegment::Type::kArc;
      auto c = j.at("center");
      s.center = {c[0], c[1], c[2]};
      s.radius = j.at("radius").get<double>();
      s.start_angle = j.at("start_angle").get<double>();
      s.sweep = j.at("sweep").get<double>();
      s.start = arc_point(s, s.start_angle);
    } else {
      throw GeometryError("unknown segment type: " + type);
    }
    p.segments.push_back(s);
  }
  validate_path(p);
  return p;
}

}  // namespace tiltcage
