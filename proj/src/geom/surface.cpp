// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/geom/surface.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

namespace graspkit::geom {

std::vector<Vec2> project_to_plane(const PointCloud& cloud, const Pose& plane_pose) {
  if (cloud.empty()) throw EmptyInput("project_to_plane: empty cloud");
  std::vector<Vec2> out;
  out.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    const Vec3 local = plane_pose.inverse_apply(p);
    out.emplace_back(local.x(), local.y());
  }
  return out;
}

PlaneFit fit_plane(const std::vector<Vec3>& points) {
  PlaneFit fit;
  const double n = double(points.size());
  for (const auto& p : points) fit.centroid += p;
  fit.centroid /= n;
  Mat3 cov = Mat3::Zero();
  for (const auto& p : points) {
    const Vec3 d = p - fit.centroid;
    cov += d * d.transpose();
  }
  cov /= n;
  Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  fit.normal = es.eigenvectors().col(0);  // smallest variance direction
  double acc = 0.0;
  for (const auto& p : points) {
    const double r = (p - fit.centroid).dot(fit.normal);
    acc += r * r;
  }
  fit.rms = std::sqrt(acc / n);
  return fit;
}

Pose estimate_item_pose(const PointCloud& cloud, double patch_fraction,
                        const Vec3& view_dir) {
  if (cloud.size() < 10) throw DegenerateInput("estimate_item_pose: need >= 10 points");
  if (patch_fraction <= 0.0 || patch_fraction > 1.0) {
    throw DegenerateInput("estimate_item_pose: patch_fraction must be in (0, 1]");
  }
  const Vec3 view = view_dir.normalized();

  // Central patch in the camera-facing projection: points whose in-image
  // offset from the 2D centroid stays within patch_fraction of the
  // bounding-box extent.
  const Pose image_frame = Pose::from_z_axis(view, Vec3::UnitX());
  std::vector<Vec2> uv;
  uv.reserve(cloud.size());
  Vec2 mean = Vec2::Zero();
  for (const auto& p : cloud.points) {
    const Vec3 local = image_frame.inverse_apply(p);
    uv.emplace_back(local.x(), local.y());
    mean += uv.back();
  }
  mean /= double(uv.size());
  Vec2 lo = uv[0], hi = uv[0];
  for (const auto& q : uv) {
    lo = lo.cwiseMin(q);
    hi = hi.cwiseMax(q);
  }
  const double extent = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-9});
  const double patch_radius = 0.5 * patch_fraction * extent;

  std::vector<Vec3> patch;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if ((uv[i] - mean).norm() <= patch_radius) patch.push_back(cloud.points[i]);
  }
  if (patch.size() < 6) throw DegenerateInput("estimate_item_pose: too few patch points");

  // Depth gate before fitting: a stray background column would otherwise
  // dominate the covariance and the trim rounds would then discard face
  // points instead of the junk. Keep points inside a robust band around the
  // median depth along the view ray.
  {
    std::vector<double> depth(patch.size());
    for (std::size_t i = 0; i < patch.size(); ++i) depth[i] = patch[i].dot(view);
    std::vector<double> tmp = depth;
    std::nth_element(tmp.begin(), tmp.begin() + long(tmp.size() / 2), tmp.end());
    const double med = tmp[tmp.size() / 2];
    for (auto& d : tmp) d = std::abs(d - med);
    std::nth_element(tmp.begin(), tmp.begin() + long(tmp.size() / 2), tmp.end());
    const double band = std::max(6.0 * tmp[tmp.size() / 2], 0.005);
    std::vector<Vec3> gated;
    gated.reserve(patch.size());
    for (std::size_t i = 0; i < patch.size(); ++i) {
      if (std::abs(depth[i] - med) <= band) gated.push_back(patch[i]);
    }
    if (gated.size() >= 6) patch.swap(gated);
  }

  // Trimmed PCA: refit after discarding the worst 10% residuals, 3 rounds.
  PlaneFit fit = fit_plane(patch);
  for (int round = 0; round < 3; ++round) {
    if (patch.size() < 8) break;
    std::vector<std::pair<double, std::size_t>> resid(patch.size());
    for (std::size_t i = 0; i < patch.size(); ++i) {
      resid[i] = {std::abs((patch[i] - fit.centroid).dot(fit.normal)), i};
    }
    std::sort(resid.begin(), resid.end());
    const std::size_t keep = std::max<std::size_t>(6, std::size_t(0.9 * double(patch.size())));
    std::vector<Vec3> trimmed;
    trimmed.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) trimmed.push_back(patch[resid[i].second]);
    patch.swap(trimmed);
    fit = fit_plane(patch);
  }

  Vec3 z = fit.normal;
  if (z.dot(view) > 0.0) z = -z;  // face normal points at the camera

  // World-horizontal x-axis within the face, ties toward world +x.
  Vec3 x = Vec3::UnitX() - Vec3::UnitX().dot(z) * z;
  if (x.norm() < 1e-9) {
    x = Vec3::UnitY() - Vec3::UnitY().dot(z) * z;
  }
  x.normalize();
  if (x.dot(Vec3::UnitX()) < 0.0) x = -x;

  Pose pose;
  pose.rotation.col(0) = x;
  pose.rotation.col(1) = z.cross(x);
  pose.rotation.col(2) = z;
  pose.translation = fit.centroid;
  return pose;
}

double flatness(const PointCloud& cloud, const Point3& center, double radius) {
  std::vector<Vec3> nbhd;
  for (const auto& p : cloud.points) {
    if ((p - center).norm() <= radius) nbhd.push_back(p);
  }
  if (nbhd.size() < 6) throw DegenerateInput("flatness: fewer than 6 neighborhood points");
  return fit_plane(nbhd).rms;
}

}  // namespace graspkit::geom
