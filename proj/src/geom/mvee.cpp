// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/geom/mvee.hpp"

#include <Eigen/Eigenvalues>

namespace graspkit::geom {

std::pair<Vec3, Mat3> Ellipsoid::axes() const {
  Eigen::SelfAdjointEigenSolver<Mat3> es(A);
  // Eigenvalues ascending: smallest eigenvalue -> longest axis.
  const Vec3 ev = es.eigenvalues();
  const Mat3 dir = es.eigenvectors();
  Vec3 lengths;
  Mat3 directions;
  for (int i = 0; i < 3; ++i) {
    lengths[i] = 1.0 / std::sqrt(std::max(ev[i], 1e-300));
    directions.col(i) = dir.col(i);
  }
  return {lengths, directions};
}

double Ellipsoid::volume() const {
  return 4.0 / 3.0 * M_PI / std::sqrt(std::max(A.determinant(), 1e-300));
}

namespace {

constexpr double kPadOffset = 1e-3;  // meters
constexpr int kMaxIters = 200000;

Ellipsoid solve_khachiyan(const std::vector<Vec3>& pts, double epsilon) {
  const int n = int(pts.size());
  const int d = 3;

  Eigen::MatrixXd q(4, n);
  for (int i = 0; i < n; ++i) {
    q.col(i) << pts[i], 1.0;
  }

  Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / n);
  const double stop = double(d + 1) * (1.0 + epsilon);

  for (int iter = 0; iter < kMaxIters; ++iter) {
    const Eigen::Matrix4d x = q * u.asDiagonal() * q.transpose();
    const Eigen::Matrix4d xinv = x.inverse();
    int j = 0;
    double mmax = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = q.col(i).dot(xinv * q.col(i));
      if (m > mmax) {
        mmax = m;
        j = i;
      }
    }
    if (mmax <= stop) break;
    const double step = (mmax - d - 1.0) / ((d + 1.0) * (mmax - 1.0));
    u *= (1.0 - step);
    u[j] += step;
  }

  Ellipsoid e;
  Vec3 c = Vec3::Zero();
  for (int i = 0; i < n; ++i) c += u[i] * pts[i];
  Mat3 cov = Mat3::Zero();
  for (int i = 0; i < n; ++i) cov += u[i] * pts[i] * pts[i].transpose();
  cov -= c * c.transpose();
  e.center = c;
  Mat3 a = cov.inverse() / double(d);
  e.A = 0.5 * (a + a.transpose());

  // Normalize so the farthest point sits exactly on the boundary; the dual
  // gap keeps this scaling within the epsilon band of the optimum.
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, e.mahalanobis2(p));
  if (worst > 1.0) e.A /= worst;
  return e;
}

}  // namespace

Ellipsoid mvee(const std::vector<Vec3>& points, double epsilon) {
  if (epsilon <= 0.0 || epsilon > 0.1) {
    throw ConfigError("mvee: epsilon must be in (0, 0.1]");
  }
  if (points.size() < 4) throw DegenerateInput("mvee: need >= 4 points");

  Vec3 mean = Vec3::Zero();
  for (const auto& p : points) mean += p;
  mean /= double(points.size());
  Mat3 cov = Mat3::Zero();
  for (const auto& p : points) cov += (p - mean) * (p - mean).transpose();
  cov /= double(points.size());

  Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  const Vec3 ev = es.eigenvalues();  // ascending

  std::vector<Vec3> work = points;
  if (std::sqrt(std::max(ev[0], 0.0)) < 0.5e-3) {
    if (std::sqrt(std::max(ev[1], 0.0)) < 0.5e-3) {
      throw DegenerateInput("mvee: input is rank-deficient (collinear)");
    }
    // Near-planar partial observation: thicken along the thin direction.
    const Vec3 normal = es.eigenvectors().col(0);
    work.clear();
    work.reserve(points.size() * 2);
    for (const auto& p : points) {
      work.push_back(p + kPadOffset * normal);
      work.push_back(p - kPadOffset * normal);
    }
  }

  Ellipsoid e = solve_khachiyan(work, epsilon);
  if (!e.A.allFinite()) throw DegenerateInput("mvee: solver produced non-finite shape");
  Eigen::SelfAdjointEigenSolver<Mat3> check(e.A);
  if (check.eigenvalues().minCoeff() <= 0.0) {
    throw DegenerateInput("mvee: input is rank-deficient after padding");
  }
  return e;
}

Ellipsoid mvee(const PointCloud& cloud, double epsilon) {
  return mvee(cloud.points, epsilon);
}

}  // namespace graspkit::geom
