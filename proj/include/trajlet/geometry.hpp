#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trajlet/error.hpp"

namespace trajlet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline double distance(Point a, Point b) { return norm(a - b); }

/// Raw timestamped 2-D trajectory: T >= 2 points with implicit uniform
/// timestep, coordinates in meters. `label` is a maneuver-class tag used
/// by the synthetic data path only.
struct Trajectory {
  std::string id;
  std::vector<Point> points;
  std::optional<std::string> label;
};

/// Rigid map into the canonical frame: q = R(rotation) * (p + translation).
struct RigidTransform {
  Point translation;
  double rotation = 0.0;

  Point apply(Point p) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    const double tx = p.x + translation.x, ty = p.y + translation.y;
    return {c * tx - s * ty, s * tx + c * ty};
  }

  Point invert(Point q) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    return {c * q.x + s * q.y - translation.x,
            -s * q.x + c * q.y - translation.y};
  }
};

/// Agent-centric canonical form: starts at the origin, overall displacement
/// along +x. Keeps the transform that produced it so the original frame can
/// be recovered.
struct NormalizedTrajectory {
  std::vector<Point> points;
  RigidTransform transform;
  std::string source_id;
  std::optional<std::string> label;
};

struct DisplacementVector {
  double dx = 0.0;
  double dy = 0.0;
};

inline void validate(const Trajectory& traj) {
  if (traj.points.size() < 2) {
    raise(Errc::degenerate_trajectory,
          "trajectory '" + traj.id + "' has fewer than 2 points");
  }
  for (const Point& p : traj.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      raise(Errc::degenerate_trajectory,
            "trajectory '" + traj.id + "' contains non-finite coordinates");
    }
  }
}

namespace detail {

// Rotation target: overall displacement onto +x. Falls back to the first
// nonzero segment, then to identity, when the displacement degenerates.
inline double canonical_rotation(const std::vector<Point>& pts) {
  const Point dp = pts.back() - pts.front();
  if (norm(dp) >= 1e-9) return -std::atan2(dp.y, dp.x);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point seg = pts[i + 1] - pts[i];
    if (norm(seg) > 0.0) return -std::atan2(seg.y, seg.x);
  }
  return 0.0;
}

}  // namespace detail

inline NormalizedTrajectory normalize(const Trajectory& traj) {
  validate(traj);
  const Point origin = traj.points.front();
  std::vector<Point> shifted(traj.points.size());
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    shifted[i] = traj.points[i] - origin;
  }
  RigidTransform tf{{-origin.x, -origin.y}, detail::canonical_rotation(shifted)};

  NormalizedTrajectory nt;
  nt.points.resize(shifted.size());
  const double c = std::cos(tf.rotation), s = std::sin(tf.rotation);
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    nt.points[i] = {c * shifted[i].x - s * shifted[i].y,
                    s * shifted[i].x + c * shifted[i].y};
  }
  nt.points.front() = {0.0, 0.0};
  nt.transform = tf;
  nt.source_id = traj.id;
  nt.label = traj.label;
  return nt;
}

inline Trajectory denormalize(const NormalizedTrajectory& nt) {
  Trajectory traj;
  traj.id = nt.source_id;
  traj.label = nt.label;
  traj.points.resize(nt.points.size());
  for (std::size_t i = 0; i < nt.points.size(); ++i) {
    traj.points[i] = nt.transform.invert(nt.points[i]);
  }
  return traj;
}

/// Mean pointwise Euclidean distance between equal-length sequences.
inline double ade(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() != b.size()) {
    raise(Errc::length_mismatch, "ade: sequence lengths differ (" +
                                     std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()) + ")");
  }
  if (a.empty()) raise(Errc::empty_sequence, "ade: empty sequences");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += distance(a[i], b[i]);
  return sum / static_cast<double>(a.size());
}

/// Euclidean distance between the final points.
inline double fde(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) raise(Errc::empty_sequence, "fde: empty sequence");
  return distance(a.back(), b.back());
}

inline double ade(const NormalizedTrajectory& a, const NormalizedTrajectory& b) {
  return ade(std::span<const Point>(a.points), std::span<const Point>(b.points));
}

inline double fde(const NormalizedTrajectory& a, const NormalizedTrajectory& b) {
  return fde(std::span<const Point>(a.points), std::span<const Point>(b.points));
}

inline DisplacementVector displacement(const NormalizedTrajectory& nt) {
  const Point dp = nt.points.back() - nt.points.front();
  return {dp.x, dp.y};
}

}  // namespace trajlet
