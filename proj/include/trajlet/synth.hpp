#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trajlet/error.hpp"
#include "trajlet/geometry.hpp"
#include "trajlet/rng.hpp"

namespace trajlet {

/// Fixed timestep: T=60 spans 6 s, comparable to forecasting horizons.
constexpr double kTimestep = 0.1;

enum class Family {
  straight,
  left_turn,
  right_turn,
  u_turn,
  lane_change_left,
  lane_change_right,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::straight: return "straight";
    case Family::left_turn: return "left-turn";
    case Family::right_turn: return "right-turn";
    case Family::u_turn: return "u-turn";
    case Family::lane_change_left: return "lane-change-left";
    case Family::lane_change_right: return "lane-change-right";
  }
  return "unknown";
}

inline Family family_from_name(const std::string& name) {
  for (const Family f : {Family::straight, Family::left_turn, Family::right_turn,
                         Family::u_turn, Family::lane_change_left,
                         Family::lane_change_right}) {
    if (name == family_name(f)) return f;
  }
  raise(Errc::parse_error, "unknown maneuver family '" + name + "'");
}

struct ManeuverSpec {
  Family family = Family::straight;
  double speed_lo = 9.0, speed_hi = 11.0;        // m/s
  double curvature_lo = 0.03, curvature_hi = 0.035;  // 1/m
  double noise_sigma = 0.05;                     // meters, per point per axis
  std::size_t t_len = 60;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Nominal geometry in the agent frame (start at origin, heading +x), at
// constant speed v along the path; s is arc length.
inline Point family_point(Family family, double s, double total_s,
                          double curvature, double lane_width = 3.5) {
  switch (family) {
    case Family::straight:
      return {s, 0.0};
    case Family::left_turn:
    case Family::right_turn: {
      const double r = 1.0 / curvature;
      const double theta = curvature * s;
      const Point p{r * std::sin(theta), r * (1.0 - std::cos(theta))};
      return family == Family::left_turn ? p : Point{p.x, -p.y};
    }
    case Family::u_turn: {
      // Arc at the requested curvature until the heading flips, then straight.
      const double r = 1.0 / curvature;
      const double s_turn = 3.14159265358979323846 / curvature;
      if (s <= s_turn) {
        const double theta = curvature * s;
        return {r * std::sin(theta), r * (1.0 - std::cos(theta))};
      }
      return {-(s - s_turn), 2.0 * r};
    }
    case Family::lane_change_left:
    case Family::lane_change_right: {
      const double u = total_s > 0.0 ? s / total_s : 0.0;
      const double y = lane_width * (3.0 * u * u - 2.0 * u * u * u);
      return {s, family == Family::lane_change_left ? y : -y};
    }
  }
  return {0.0, 0.0};
}

}  // namespace detail

inline void validate(const ManeuverSpec& spec) {
  if (spec.t_len < 2) raise(Errc::usage_error, "maneuver spec: T must be >= 2");
  if (spec.speed_lo <= 0.0 || spec.speed_hi < spec.speed_lo) {
    raise(Errc::usage_error, "maneuver spec: invalid speed range");
  }
  if (spec.curvature_lo <= 0.0 || spec.curvature_hi < spec.curvature_lo) {
    raise(Errc::usage_error, "maneuver spec: invalid curvature range");
  }
  if (spec.noise_sigma < 0.0) raise(Errc::usage_error, "maneuver spec: negative noise");
}

/// Deterministic labeled trajectory synthesis. Each trajectory gets a random
/// rigid pose so that agent-centric normalization is exercised downstream.
inline std::vector<Trajectory> generate(const std::vector<ManeuverSpec>& specs) {
  std::vector<Trajectory> out;
  for (std::size_t si = 0; si < specs.size(); ++si) {
    const ManeuverSpec& spec = specs[si];
    validate(spec);
    // Keyed by the spec's own seed only: two specs sharing a seed draw the
    // same speed/curvature/pose sequence (mirror-pair construction relies
    // on this).
    Rng rng = Rng::substream(spec.seed, "synth");
    for (std::size_t i = 0; i < spec.count; ++i) {
      const double speed = rng.next_uniform(spec.speed_lo, spec.speed_hi);
      const double curvature = rng.next_uniform(spec.curvature_lo, spec.curvature_hi);
      const double pose_heading = rng.next_uniform(-3.14159265358979323846,
                                                   3.14159265358979323846);
      const double pose_x = rng.next_uniform(-100.0, 100.0);
      const double pose_y = rng.next_uniform(-100.0, 100.0);
      const double total_s = speed * kTimestep * static_cast<double>(spec.t_len - 1);

      Trajectory t;
      t.id = std::string(family_name(spec.family)) + "-" + std::to_string(si) +
             "-" + std::to_string(i);
      t.label = family_name(spec.family);
      t.points.resize(spec.t_len);
      const double c = std::cos(pose_heading), s = std::sin(pose_heading);
      for (std::size_t k = 0; k < spec.t_len; ++k) {
        const double arc = speed * kTimestep * static_cast<double>(k);
        Point p = detail::family_point(spec.family, arc, total_s, curvature);
        p.x += spec.noise_sigma * rng.next_gaussian();
        p.y += spec.noise_sigma * rng.next_gaussian();
        t.points[k] = {c * p.x - s * p.y + pose_x, s * p.x + c * p.y + pose_y};
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace trajlet
