#include "trajlet/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "trajlet/rng.hpp"

using namespace trajlet;

namespace {

Trajectory make(std::vector<Point> pts, std::string id = "t") {
  Trajectory t;
  t.id = std::move(id);
  t.points = std::move(pts);
  return t;
}

Trajectory random_trajectory(Rng& rng, std::size_t t_len) {
  Trajectory t = make({});
  t.points.resize(t_len);
  for (auto& p : t.points) {
    p = {rng.next_uniform(-50.0, 50.0), rng.next_uniform(-50.0, 50.0)};
  }
  return t;
}

}  // namespace

TEST(Normalize, ShiftOnlyWhenAlreadyEastFacing) {
  const NormalizedTrajectory nt = normalize(make({{1, 1}, {2, 1}}));
  EXPECT_DOUBLE_EQ(nt.points[0].x, 0.0);
  EXPECT_DOUBLE_EQ(nt.points[0].y, 0.0);
  EXPECT_NEAR(nt.points[1].x, 1.0, 1e-12);
  EXPECT_NEAR(nt.points[1].y, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(nt.transform.translation.x, -1.0);
  EXPECT_DOUBLE_EQ(nt.transform.translation.y, -1.0);
  EXPECT_NEAR(nt.transform.rotation, 0.0, 1e-12);
}

TEST(Normalize, RotatesNorthboundToEast) {
  // R(-pi/2) * (0, 2) = (2, 0), worked by hand from the rotation matrix.
  const NormalizedTrajectory nt = normalize(make({{0, 0}, {0, 2}}));
  EXPECT_NEAR(nt.points[1].x, 2.0, 1e-12);
  EXPECT_NEAR(nt.points[1].y, 0.0, 1e-12);
  EXPECT_NEAR(nt.transform.rotation, -M_PI / 2, 1e-12);
}

TEST(Normalize, StationaryTrajectoryFallsBackToIdentity) {
  const NormalizedTrajectory nt = normalize(make({{5, 5}, {5, 5}, {5, 5}}));
  for (const Point& p : nt.points) {
    EXPECT_DOUBLE_EQ(p.x, 0.0);
    EXPECT_DOUBLE_EQ(p.y, 0.0);
  }
  EXPECT_DOUBLE_EQ(nt.transform.rotation, 0.0);
}

TEST(Normalize, ClosedLoopFallsBackToFirstSegment) {
  // Zero overall displacement; first segment (1,1) fixes the rotation.
  const NormalizedTrajectory nt = normalize(make({{0, 0}, {1, 1}, {0, 0}}));
  EXPECT_NEAR(nt.transform.rotation, -M_PI / 4, 1e-12);
  EXPECT_NEAR(nt.points[1].y, 0.0, 1e-12);
  EXPECT_NEAR(nt.points[1].x, std::sqrt(2.0), 1e-12);
}

TEST(Normalize, RejectsSinglePoint) {
  try {
    normalize(make({{0, 0}}));
    FAIL() << "expected DegenerateTrajectory";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_trajectory);
  }
}

TEST(Normalize, RejectsNonFinite) {
  EXPECT_THROW(normalize(make({{0, 0}, {std::nan(""), 1}})), Error);
}

TEST(Normalize, DisplacementAlignedWithXAxis) {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    const Trajectory t = random_trajectory(rng, 2 + rng.next_below(30));
    const NormalizedTrajectory nt = normalize(t);
    const DisplacementVector d = displacement(nt);
    const double mag = std::hypot(d.dx, d.dy);
    if (mag > 0) EXPECT_LE(std::abs(d.dy), 1e-9 * mag);
    EXPECT_DOUBLE_EQ(nt.points.front().x, 0.0);
    EXPECT_DOUBLE_EQ(nt.points.front().y, 0.0);
  }
}

TEST(Normalize, IdempotentUpToRecordedTransform) {
  Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    const Trajectory t = random_trajectory(rng, 2 + rng.next_below(20));
    const NormalizedTrajectory once = normalize(t);
    Trajectory again = make(once.points, "again");
    const NormalizedTrajectory twice = normalize(again);
    EXPECT_NEAR(twice.transform.translation.x, 0.0, 1e-9);
    EXPECT_NEAR(twice.transform.translation.y, 0.0, 1e-9);
    EXPECT_NEAR(std::remainder(twice.transform.rotation, 2 * M_PI), 0.0, 1e-9);
  }
}

TEST(Normalize, PreservesPairwiseDistances) {
  Rng rng(13);
  for (int it = 0; it < 50; ++it) {
    const Trajectory t = random_trajectory(rng, 2 + rng.next_below(15));
    const NormalizedTrajectory nt = normalize(t);
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      for (std::size_t j = i + 1; j < t.points.size(); ++j) {
        const double before = distance(t.points[i], t.points[j]);
        const double after = distance(nt.points[i], nt.points[j]);
        EXPECT_LT(std::abs(before - after), 1e-9);
      }
    }
  }
}

TEST(Denormalize, RoundTripsWithinTolerance) {
  Rng rng(17);
  for (int it = 0; it < 100; ++it) {
    const Trajectory t = random_trajectory(rng, 2 + rng.next_below(40));
    const Trajectory back = denormalize(normalize(t));
    ASSERT_EQ(back.points.size(), t.points.size());
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      EXPECT_NEAR(back.points[i].x, t.points[i].x, 1e-9);
      EXPECT_NEAR(back.points[i].y, t.points[i].y, 1e-9);
    }
  }
}

TEST(Denormalize, InverseTransformByHand) {
  NormalizedTrajectory nt;
  nt.points = {{0, 0}, {1, 0}};
  nt.transform = {{-1.0, -1.0}, 0.0};
  nt.source_id = "seg";
  const Trajectory t = denormalize(nt);
  EXPECT_NEAR(t.points[0].x, 1.0, 1e-12);
  EXPECT_NEAR(t.points[0].y, 1.0, 1e-12);
  EXPECT_NEAR(t.points[1].x, 2.0, 1e-12);
  EXPECT_NEAR(t.points[1].y, 1.0, 1e-12);
}

TEST(Denormalize, IdentityTransformLeavesPointsUnchanged) {
  NormalizedTrajectory nt;
  nt.points = {{0, 0}, {3, 4}};
  nt.transform = {{0.0, 0.0}, 0.0};
  const Trajectory t = denormalize(nt);
  EXPECT_DOUBLE_EQ(t.points[1].x, 3.0);
  EXPECT_DOUBLE_EQ(t.points[1].y, 4.0);
}

TEST(Ade, IdenticalSequencesGiveZero) {
  const std::vector<Point> a = {{0, 0}, {1, 2}, {3, 1}};
  EXPECT_DOUBLE_EQ(ade(a, a), 0.0);
}

TEST(Ade, ConstantOffsetGivesOffsetNorm) {
  std::vector<Point> a = {{0, 0}, {1, 0}, {2, 0}};
  std::vector<Point> b = a;
  for (auto& p : b) p.y += 1.0;
  EXPECT_DOUBLE_EQ(ade(a, b), 1.0);
}

TEST(Ade, HandWorkedExample) {
  const std::vector<Point> a = {{0, 0}, {1, 0}};
  const std::vector<Point> b = {{0, 0}, {0, 1}};
  EXPECT_NEAR(ade(a, b), std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(Ade, LengthMismatchThrows) {
  const std::vector<Point> a = {{0, 0}, {1, 0}};
  const std::vector<Point> b = {{0, 0}};
  try {
    ade(std::span<const Point>(a), std::span<const Point>(b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::length_mismatch);
  }
}

TEST(Fde, Examples) {
  const std::vector<Point> a = {{0, 0}, {1, 0}};
  const std::vector<Point> o = {{5, 5}, {0, 0}};
  EXPECT_DOUBLE_EQ(fde(a, a), 0.0);
  EXPECT_DOUBLE_EQ(fde(a, o), 1.0);
  const std::vector<Point> c = {{0, 0}, {3, 4}};
  EXPECT_DOUBLE_EQ(fde(c, o), 5.0);  // 3-4-5 triangle
  EXPECT_THROW(fde(std::span<const Point>(a), std::span<const Point>()), Error);
}

TEST(AdeFde, PseudometricProperties) {
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    const std::size_t t_len = 2 + rng.next_below(10);
    const Trajectory a = random_trajectory(rng, t_len);
    const Trajectory b = random_trajectory(rng, t_len);
    const Trajectory c = random_trajectory(rng, t_len);
    for (auto metric : {+[](const Trajectory& u, const Trajectory& v) {
                          return ade(std::span<const Point>(u.points),
                                     std::span<const Point>(v.points));
                        },
                        +[](const Trajectory& u, const Trajectory& v) {
                          return fde(std::span<const Point>(u.points),
                                     std::span<const Point>(v.points));
                        }}) {
      const double ab = metric(a, b), ba = metric(b, a);
      const double ac = metric(a, c), cb = metric(c, b);
      EXPECT_GE(ab, 0.0);
      EXPECT_DOUBLE_EQ(ab, ba);
      EXPECT_DOUBLE_EQ(metric(a, a), 0.0);
      EXPECT_LE(ab, ac + cb + 1e-12);
    }
  }
}

TEST(Displacement, Examples) {
  auto nt = [](std::vector<Point> pts) {
    NormalizedTrajectory n;
    n.points = std::move(pts);
    return n;
  };
  DisplacementVector d = displacement(nt({{0, 0}, {2, 0}}));
  EXPECT_DOUBLE_EQ(d.dx, 2.0);
  EXPECT_DOUBLE_EQ(d.dy, 0.0);
  d = displacement(nt({{0, 0}, {1, 1}, {0, 0}}));
  EXPECT_DOUBLE_EQ(d.dx, 0.0);
  EXPECT_DOUBLE_EQ(d.dy, 0.0);
  d = displacement(nt({{0, 0}, {3, 0}, {3, 4}}));
  EXPECT_DOUBLE_EQ(d.dx, 3.0);
  EXPECT_DOUBLE_EQ(d.dy, 4.0);
}
