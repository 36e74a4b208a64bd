// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graspkit {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kGravity = 9.81;           // m/s^2
inline constexpr double kDeg = M_PI / 180.0;       // degrees -> radians
inline constexpr double kPoseOrthoTol = 1e-9;

// ---------------------------------------------------------------------------
// Errors. Precondition violations and hard faults are exceptions; expected
// planning/simulation outcomes (stuck, dropped, timeout) are result values.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  using Error::Error;
};
struct DegenerateInput : Error {
  using Error::Error;
};
struct InvalidCamera : Error {
  using Error::Error;
};
struct PackingFailure : Error {
  using Error::Error;
};
struct UnstableParams : Error {
  using Error::Error;
};
struct NoCandidates : Error {
  using Error::Error;
};
struct TooSmall : NoCandidates {
  using NoCandidates::NoCandidates;
};
struct HandleNotFound : Error {
  using Error::Error;
};
struct Incompatible : Error {
  using Error::Error;
};
struct PlanFailure : Error {
  using Error::Error;
};
struct AlignmentFailure : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

// Registration that ran out of iterations; carries the last trimmed RMS.
struct ConvergenceFailure : Error {
  ConvergenceFailure(const std::string& msg, double rms)
      : Error(msg), last_rms(rms) {}
  double last_rms;
};

// ---------------------------------------------------------------------------
// Rigid pose. Rotation is a proper orthonormal matrix, translation in meters.

struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static Pose identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 rotate(const Vec3& v) const { return rotation * v; }
  Vec3 inverse_apply(const Vec3& p) const {
    return rotation.transpose() * (p - translation);
  }

  Pose inverse() const {
    Pose out;
    out.rotation = rotation.transpose();
    out.translation = -(out.rotation * translation);
    return out;
  }

  // this ∘ other: apply `other` first, then this.
  Pose compose(const Pose& other) const {
    Pose out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
  }

  bool is_valid(double tol = kPoseOrthoTol) const {
    if (!rotation.allFinite() || !translation.allFinite()) return false;
    const Mat3 gram = rotation.transpose() * rotation;
    if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
    return rotation.determinant() > 0.0;
  }

  static Pose from_axis_angle(const Vec3& axis, double angle,
                              const Vec3& translation = Vec3::Zero()) {
    Pose out;
    out.rotation = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
    out.translation = translation;
    return out;
  }

  // Frame whose z-axis is `z` with x chosen as the projection of `x_hint`.
  static Pose from_z_axis(const Vec3& z, const Vec3& x_hint,
                          const Vec3& translation = Vec3::Zero()) {
    const Vec3 zn = z.normalized();
    Vec3 x = x_hint - x_hint.dot(zn) * zn;
    if (x.norm() < 1e-12) {
      const Vec3 alt = std::abs(zn.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
      x = alt - alt.dot(zn) * zn;
    }
    x.normalize();
    const Vec3 y = zn.cross(x);
    Pose out;
    out.rotation.col(0) = x;
    out.rotation.col(1) = y;
    out.rotation.col(2) = zn;
    out.translation = translation;
    return out;
  }
};

// Angle of the relative rotation between two frames, radians.
inline double rotation_angle(const Mat3& r) {
  const double c = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

inline double pose_angle_between(const Pose& a, const Pose& b) {
  return rotation_angle(a.rotation.transpose() * b.rotation);
}

// ---------------------------------------------------------------------------
// Point cloud with optional unit normals and per-point item labels.

struct PointCloud {
  std::vector<Point3> points;
  std::vector<Vec3> normals;     // empty, or one unit normal per point
  std::vector<int32_t> labels;   // empty, or one item label per point

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  void reserve(std::size_t n) { points.reserve(n); }

  void push(const Point3& p) { points.push_back(p); }
  void push(const Point3& p, const Vec3& n) {
    points.push_back(p);
    normals.push_back(n);
  }

  bool has_normals() const { return normals.size() == points.size() && !points.empty(); }

  PointCloud transformed(const Pose& pose) const {
    PointCloud out;
    out.points.reserve(points.size());
    for (const auto& p : points) out.points.push_back(pose.apply(p));
    out.normals.reserve(normals.size());
    for (const auto& n : normals) out.normals.push_back(pose.rotate(n));
    out.labels = labels;
    return out;
  }

  Point3 centroid() const {
    Vec3 c = Vec3::Zero();
    for (const auto& p : points) c += p;
    return points.empty() ? c : Vec3(c / double(points.size()));
  }

  void bounds(Vec3& lo, Vec3& hi) const {
    lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    hi = -lo;
    for (const auto& p : points) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
};

// ---------------------------------------------------------------------------
// Oriented box: pose frame centered in the box, half extents along its axes.

struct Obb {
  Pose pose;
  Vec3 half = Vec3::Zero();

  static Obb from_dims(const Pose& pose, const Vec3& dims) { return {pose, 0.5 * dims}; }

  bool contains(const Point3& p, double inflate = 0.0) const {
    const Vec3 local = pose.inverse_apply(p).cwiseAbs();
    return (local - half).maxCoeff() <= inflate;
  }

  // Distance from a point to the box surface; 0 inside.
  double exterior_distance(const Point3& p) const {
    const Vec3 local = pose.inverse_apply(p).cwiseAbs();
    return (local - half).cwiseMax(0.0).norm();
  }

  Point3 closest_point(const Point3& p) const {
    const Vec3 local = pose.inverse_apply(p);
    return pose.apply(local.cwiseMax(-half).cwiseMin(half));
  }

  // World-frame axis-aligned bounds of the box.
  void bounds(Vec3& lo, Vec3& hi) const {
    const Vec3 ext = pose.rotation.cwiseAbs() * half;
    lo = pose.translation - ext;
    hi = pose.translation + ext;
  }
};

// Separating-axis overlap test with a margin: true when the boxes
// interpenetrate by more than `tolerance` along every candidate axis.
bool obb_overlap(const Obb& a, const Obb& b, double tolerance = 0.0);

// ---------------------------------------------------------------------------
// Deterministic RNG. splitmix64 core with explicit forking so that every
// consumer owns an independent, reproducible stream regardless of call order.

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive integer range.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + int64_t(next_u64() % uint64_t(hi - lo + 1));
  }

  // Uniform in [0, n).
  uint64_t uniform_int(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  double normal() {
    // Box-Muller; second variate discarded to keep the stream stateless.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  // Zero-mean normal truncated to [-bound, bound] by resampling.
  double truncated_normal(double sigma, double bound) {
    if (sigma <= 0.0) return 0.0;
    for (int i = 0; i < 64; ++i) {
      const double x = sigma * normal();
      if (std::abs(x) <= bound) return x;
    }
    return 0.0;
  }

  bool bernoulli(double p) { return uniform() < p; }

  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  // Independent child stream; deterministic in (parent seed, tag).
  Rng fork(uint64_t tag) const {
    uint64_t z = state_ ^ (tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return Rng(z ^ (z >> 33));
  }

 private:
  uint64_t state_;
};

}  // namespace graspkit
