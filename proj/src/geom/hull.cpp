// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/geom/hull.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

namespace graspkit::geom {

namespace {

struct Tri {
  std::array<int, 3> v;  // CCW vertex indices
  bool alive = true;
};

double hash_jitter(uint64_t key) {
  key = (key ^ (key >> 33)) * 0xff51afd7ed558ccdULL;
  key = (key ^ (key >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  key ^= key >> 33;
  return (double(key >> 11) * 0x1.0p-53 - 0.5) * 2.0;
}

// Positive when d lies inside the circumcircle of CCW triangle (a, b, c).
long double incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const long double ax = a.x() - d.x(), ay = a.y() - d.y();
  const long double bx = b.x() - d.x(), by = b.y() - d.y();
  const long double cx = c.x() - d.x(), cy = c.y() - d.y();
  const long double a2 = ax * ax + ay * ay;
  const long double b2 = bx * bx + by * by;
  const long double c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

long double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (long double)(b.x() - a.x()) * (c.y() - a.y()) -
         (long double)(b.y() - a.y()) * (c.x() - a.x());
}

double circumradius(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double la = (b - c).norm();
  const double lb = (c - a).norm();
  const double lc = (a - b).norm();
  const double area2 = std::abs(double(orient(a, b, c)));
  if (area2 < 1e-300) return std::numeric_limits<double>::infinity();
  return la * lb * lc / (2.0 * area2);
}

// Plain Bowyer-Watson. Input sizes here are projections of single item
// clouds (hundreds of points), so the O(n^2) cavity scan is fine.
std::vector<Tri> delaunay(const std::vector<Vec2>& pts) {
  const int n = int(pts.size());
  std::vector<Vec2> work(pts.begin(), pts.end());

  // Super-triangle enclosing everything by a wide margin.
  Vec2 lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec2 mid = 0.5 * (lo + hi);
  const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-9});
  work.push_back(mid + Vec2(-20.0 * span, -10.0 * span));
  work.push_back(mid + Vec2(20.0 * span, -10.0 * span));
  work.push_back(mid + Vec2(0.0, 20.0 * span));

  std::vector<Tri> tris;
  tris.push_back({{n, n + 1, n + 2}, true});

  std::map<std::pair<int, int>, int> edge_count;
  for (int ip = 0; ip < n; ++ip) {
    const Vec2& p = work[ip];
    edge_count.clear();
    for (auto& t : tris) {
      if (!t.alive) continue;
      if (incircle(work[t.v[0]], work[t.v[1]], work[t.v[2]], p) > 0) {
        t.alive = false;
        for (int e = 0; e < 3; ++e) {
          int u = t.v[e], v = t.v[(e + 1) % 3];
          auto key = std::minmax(u, v);
          edge_count[{key.first, key.second}]++;
        }
      }
    }
    // Cavity boundary edges appear exactly once; fan them to p.
    for (auto& t : tris) {
      // recover directed orientation from surviving structure is not needed;
      // orientation is fixed below when the new triangle is created.
      (void)t;
    }
    for (const auto& [edge, count] : edge_count) {
      if (count != 1) continue;
      int u = edge.first, v = edge.second;
      if (orient(work[u], work[v], p) < 0) std::swap(u, v);
      if (orient(work[u], work[v], p) <= 0) continue;  // degenerate sliver
      tris.push_back({{u, v, ip}, true});
    }
    // Compact occasionally to keep the scan linear in live triangles.
    if (tris.size() > 64 && tris.size() % 512 == 0) {
      std::vector<Tri> live;
      live.reserve(tris.size());
      for (const auto& t : tris)
        if (t.alive) live.push_back(t);
      tris.swap(live);
    }
  }

  std::vector<Tri> out;
  for (const auto& t : tris) {
    if (!t.alive) continue;
    if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
    out.push_back(t);
  }
  return out;
}

struct LoopExtraction {
  bool ok = false;
  std::vector<std::vector<int>> loops;  // directed vertex loops
};

// Boundary of the kept-triangle union as directed loops (interior on the
// left). Fails on pinched vertices or uncovered/disconnected structure.
LoopExtraction extract_loops(const std::vector<Tri>& tris,
                             const std::vector<char>& keep, int n_points) {
  LoopExtraction out;

  std::vector<char> covered(n_points, 0);
  std::map<std::pair<int, int>, int> undirected;  // edge -> kept incidence
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (!keep[i]) continue;
    for (int e = 0; e < 3; ++e) {
      const int u = tris[i].v[e], v = tris[i].v[(e + 1) % 3];
      covered[u] = covered[v] = 1;
      auto key = std::minmax(u, v);
      undirected[{key.first, key.second}]++;
    }
  }
  for (int i = 0; i < n_points; ++i) {
    if (!covered[i]) return out;  // isolated point, alpha too small
  }

  // Connectivity of the kept complex across shared edges.
  std::vector<int> parent(tris.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::pair<int, int>, int> first_tri;
  int kept_count = 0, root = -1;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (!keep[i]) continue;
    ++kept_count;
    root = int(i);
    for (int e = 0; e < 3; ++e) {
      auto key = std::minmax(tris[i].v[e], tris[i].v[(e + 1) % 3]);
      auto [it, inserted] = first_tri.try_emplace({key.first, key.second}, int(i));
      if (!inserted) parent[find(int(i))] = find(it->second);
    }
  }
  if (kept_count == 0) return out;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (keep[i] && find(int(i)) != find(root)) return out;  // disconnected
  }

  // Directed boundary edges, one outgoing edge per boundary vertex.
  std::unordered_map<int, int> next_vertex;
  next_vertex.reserve(undirected.size() * 2);
  std::size_t boundary_edges = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (!keep[i]) continue;
    for (int e = 0; e < 3; ++e) {
      const int u = tris[i].v[e], v = tris[i].v[(e + 1) % 3];
      auto key = std::minmax(u, v);
      if (undirected[{key.first, key.second}] != 1) continue;
      if (next_vertex.count(u)) return out;  // pinched vertex
      next_vertex[u] = v;
      ++boundary_edges;
    }
  }
  if (boundary_edges < 3) return out;

  std::unordered_map<int, char> used;
  for (const auto& [u, v] : next_vertex) {
    if (used[u]) continue;
    std::vector<int> loop;
    int cur = u;
    while (!used[cur]) {
      used[cur] = 1;
      loop.push_back(cur);
      auto it = next_vertex.find(cur);
      if (it == next_vertex.end()) return out;
      cur = it->second;
    }
    if (cur != u || loop.size() < 3) return out;
    out.loops.push_back(std::move(loop));
  }
  out.ok = true;
  return out;
}

}  // namespace

ConcaveHull concave_hull(const std::vector<Vec2>& points, double alpha) {
  if (alpha <= 0.0) throw DegenerateInput("concave_hull: alpha must be > 0");
  if (points.size() < 3) throw DegenerateInput("concave_hull: need >= 3 points");

  // Deduplicate; remember representative original coordinates.
  std::vector<Vec2> uniq;
  uniq.reserve(points.size());
  for (const auto& p : points) {
    bool dup = false;
    for (const auto& q : uniq) {
      if ((p - q).norm() < 1e-9) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    uniq.push_back(p);
  }
  if (uniq.size() < 3) throw DegenerateInput("concave_hull: fewer than 3 distinct points");

  // Collinearity check doubles as the degenerate-input gate.
  {
    bool noncollinear = false;
    for (std::size_t i = 2; i < uniq.size() && !noncollinear; ++i) {
      if (std::abs(double(orient(uniq[0], uniq[1], uniq[i]))) > 1e-16) noncollinear = true;
    }
    if (!noncollinear) throw DegenerateInput("concave_hull: collinear input");
  }

  // Triangulate on normalized, hash-jittered coordinates so exact grids and
  // cocircular inputs break ties deterministically. Output polygons index
  // back into the original coordinates.
  Vec2 lo = uniq[0], hi = uniq[0];
  for (const auto& p : uniq) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double scale = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
  std::vector<Vec2> norm(uniq.size());
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    norm[i] = (uniq[i] - lo) / scale;
    norm[i].x() += 1e-10 * hash_jitter(2 * i + 1);
    norm[i].y() += 1e-10 * hash_jitter(2 * i + 2);
  }

  const std::vector<Tri> tris = delaunay(norm);
  if (tris.empty()) throw DegenerateInput("concave_hull: triangulation failed");

  std::vector<double> radius(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    radius[i] = circumradius(uniq[tris[i].v[0]], uniq[tris[i].v[1]], uniq[tris[i].v[2]]);
  }

  double alpha_eff = alpha;
  for (int attempt = 0; attempt < 80; ++attempt, alpha_eff *= 2.0) {
    std::vector<char> keep(tris.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      keep[i] = radius[i] <= alpha_eff;
      any |= bool(keep[i]);
    }
    if (!any) continue;

    LoopExtraction ext = extract_loops(tris, keep, int(uniq.size()));
    if (!ext.ok) continue;

    ConcaveHull hull;
    hull.alpha_used = alpha_eff;
    std::vector<Polygon2D> rings;
    for (const auto& loop : ext.loops) {
      Polygon2D poly;
      poly.vertices.reserve(loop.size());
      for (int idx : loop) poly.vertices.push_back(uniq[idx]);
      rings.push_back(std::move(poly));
    }
    int outer_idx = -1;
    double best_area = 0.0;
    int positive = 0;
    for (std::size_t i = 0; i < rings.size(); ++i) {
      const double a = rings[i].signed_area();
      if (a > 0) ++positive;
      if (a > best_area) {
        best_area = a;
        outer_idx = int(i);
      }
    }
    if (positive != 1 || outer_idx < 0) continue;  // multiple shells

    hull.outer = rings[outer_idx];
    if (!hull.outer.is_simple()) continue;

    bool rings_ok = true;
    for (std::size_t i = 0; i < rings.size(); ++i) {
      if (int(i) == outer_idx) continue;
      Polygon2D holering = rings[i];
      if (holering.signed_area() > 0) {
        rings_ok = false;  // a second shell slipped through
        break;
      }
      holering.reverse();  // store holes CCW like every other polygon
      if (!holering.is_simple()) {
        rings_ok = false;
        break;
      }
      hull.holes.push_back(std::move(holering));
    }
    if (!rings_ok) continue;

    // Structural guarantee check: every input point on or inside the ring.
    bool contained = true;
    for (const auto& p : uniq) {
      if (!hull.outer.contains(p, 1e-9)) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;

    return hull;
  }
  throw DegenerateInput("concave_hull: no valid alpha complex found");
}

}  // namespace graspkit::geom
