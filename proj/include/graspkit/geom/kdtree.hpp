// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

// Static median-split k-d tree over 3D points.
class KdTree3 {
 public:
  KdTree3() = default;
  explicit KdTree3(std::vector<Vec3> points) : pts_(std::move(points)) {
    idx_.resize(pts_.size());
    for (std::size_t i = 0; i < idx_.size(); ++i) idx_[i] = int(i);
    if (!pts_.empty()) root_ = build(0, int(pts_.size()), 0);
  }

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<Vec3>& points() const { return pts_; }

  // Index of the nearest stored point and its squared distance.
  std::pair<int, double> nearest(const Vec3& q) const {
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    nearest_rec(root_, q, best, best_d2);
    return {best, best_d2};
  }

  // Minimum over stored points of an arbitrary 1-Lipschitz function of the
  // point (e.g. signed distance to a solid). Nodes are pruned with the bound
  // f(p in box) >= f(box center) - half diagonal.
  template <class DistFn>
  double min_value(DistFn&& f, double init = std::numeric_limits<double>::infinity()) const {
    double best = init;
    min_value_rec(root_, f, best);
    return best;
  }

 private:
  struct Node {
    Vec3 lo, hi;
    int begin = 0, end = 0;
    int left = -1, right = -1;
  };

  static constexpr int kLeafSize = 16;

  int build(int begin, int end, int depth) {
    Node node;
    node.begin = begin;
    node.end = end;
    node.lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    node.hi = -node.lo;
    for (int i = begin; i < end; ++i) {
      node.lo = node.lo.cwiseMin(pts_[idx_[i]]);
      node.hi = node.hi.cwiseMax(pts_[idx_[i]]);
    }
    const int id = int(nodes_.size());
    nodes_.push_back(node);
    if (end - begin > kLeafSize) {
      int axis = 0;
      const Vec3 span = node.hi - node.lo;
      if (span.y() > span.x()) axis = 1;
      if (span.z() > span[axis]) axis = 2;
      const int mid = (begin + end) / 2;
      std::nth_element(idx_.begin() + begin, idx_.begin() + mid, idx_.begin() + end,
                       [&](int a, int b) { return pts_[a][axis] < pts_[b][axis]; });
      const int l = build(begin, mid, depth + 1);
      const int r = build(mid, end, depth + 1);
      nodes_[id].left = l;
      nodes_[id].right = r;
    }
    return id;
  }

  static double aabb_dist2(const Node& n, const Vec3& q) {
    double d2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double d = std::max({n.lo[a] - q[a], 0.0, q[a] - n.hi[a]});
      d2 += d * d;
    }
    return d2;
  }

  void nearest_rec(int id, const Vec3& q, int& best, double& best_d2) const {
    if (id < 0) return;
    const Node& n = nodes_[id];
    if (aabb_dist2(n, q) >= best_d2) return;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        const double d2 = (pts_[idx_[i]] - q).squaredNorm();
        if (d2 < best_d2) {
          best_d2 = d2;
          best = idx_[i];
        }
      }
      return;
    }
    const double dl = aabb_dist2(nodes_[n.left], q);
    const double dr = aabb_dist2(nodes_[n.right], q);
    if (dl < dr) {
      nearest_rec(n.left, q, best, best_d2);
      nearest_rec(n.right, q, best, best_d2);
    } else {
      nearest_rec(n.right, q, best, best_d2);
      nearest_rec(n.left, q, best, best_d2);
    }
  }

  template <class DistFn>
  void min_value_rec(int id, DistFn&& f, double& best) const {
    if (id < 0) return;
    const Node& n = nodes_[id];
    const Vec3 center = 0.5 * (n.lo + n.hi);
    const double half_diag = 0.5 * (n.hi - n.lo).norm();
    if (f(center) - half_diag >= best) return;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        best = std::min(best, f(pts_[idx_[i]]));
      }
      return;
    }
    min_value_rec(n.left, f, best);
    min_value_rec(n.right, f, best);
  }

  std::vector<Vec3> pts_;
  std::vector<int> idx_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace graspkit::geom
