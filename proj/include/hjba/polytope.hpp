// Copyright 2026 The hjba Authors
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

#ifndef HJBA_POLYTOPE_HPP_
#define HJBA_POLYTOPE_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "hjba/errors.hpp"
#include "hjba/pose.hpp"

namespace hjba {

/// Bounded convex region {y : a_i . y <= b_i} with the vertex list cached.
/// Face normals are unit-length and outward; vertices are ordered
/// counter-clockwise and consistent with the halfspaces.
class ConvexPolytope {
 public:
  ConvexPolytope() = default;

  /// Builds the convex hull of `points` and derives the face form.
  /// Throws ValidationError if the hull is degenerate (< 3 vertices).
  static ConvexPolytope from_vertices(const std::vector<Vec2>& points) {
    std::vector<Vec2> hull = convex_hull(points);
    if (hull.size() < 3) {
      throw ValidationError("polytope degenerate: fewer than 3 hull vertices");
    }
    ConvexPolytope p;
    p.vertices_ = std::move(hull);
    p.derive_faces();
    return p;
  }

  static ConvexPolytope axis_aligned_box(Vec2 lo, Vec2 hi) {
    return from_vertices({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
  }

  /// Rectangle of extents length x width, centered at `center`, rotated by
  /// `angle`.
  static ConvexPolytope oriented_box(Vec2 center, double length, double width,
                                     double angle) {
    const Vec2 u = Vec2{1.0, 0.0}.rotated(angle) * (0.5 * length);
    const Vec2 v = Vec2{0.0, 1.0}.rotated(angle) * (0.5 * width);
    return from_vertices(
        {center - u - v, center + u - v, center + u + v, center - u + v});
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Vec2>& normals() const { return normals_; }
  const std::vector<double>& offsets() const { return offsets_; }
  std::size_t face_count() const { return normals_.size(); }

  bool contains(Vec2 p, double tol = 1e-9) const {
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      if (normals_[i].dot(p) > offsets_[i] + tol) return false;
    }
    return true;
  }

  /// Farthest vertex in direction `dir`.
  Vec2 support(Vec2 dir) const {
    Vec2 best = vertices_[0];
    double best_dot = best.dot(dir);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      const double d = vertices_[i].dot(dir);
      if (d > best_dot) {
        best_dot = d;
        best = vertices_[i];
      }
    }
    return best;
  }

  ConvexPolytope translated(Vec2 dv) const {
    ConvexPolytope p = *this;
    for (auto& v : p.vertices_) v = v + dv;
    for (std::size_t i = 0; i < p.normals_.size(); ++i) {
      p.offsets_[i] += p.normals_[i].dot(dv);
    }
    return p;
  }

  double area() const {
    double a = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      a += vertices_[i].cross(vertices_[(i + 1) % vertices_.size()]);
    }
    return 0.5 * a;
  }

  Vec2 centroid() const {
    Vec2 c{0.0, 0.0};
    for (const auto& v : vertices_) c = c + v;
    return c * (1.0 / static_cast<double>(vertices_.size()));
  }

  std::pair<Vec2, Vec2> aabb() const {
    Vec2 lo = vertices_[0], hi = vertices_[0];
    for (const auto& v : vertices_) {
      lo.x = std::min(lo.x, v.x);
      lo.y = std::min(lo.y, v.y);
      hi.x = std::max(hi.x, v.x);
      hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
  }

  /// Checks the face/vertex invariants; throws ValidationError on failure.
  void validate() const {
    if (vertices_.size() < 3 || normals_.size() < 3) {
      throw ValidationError("polytope must have at least 3 faces");
    }
    for (const auto& v : vertices_) {
      if (!contains(v, 1e-9)) {
        throw ValidationError("polytope vertex violates its halfspaces");
      }
    }
    // The hull of the cached vertices must reproduce the same set.
    const ConvexPolytope rebuilt = from_vertices(vertices_);
    if (rebuilt.vertices_.size() != vertices_.size()) {
      throw ValidationError("polytope vertices are not in convex position");
    }
  }

  /// Convex hull (Andrew monotone chain), counter-clockwise, collinear
  /// points dropped.
  static std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) {
                            return (a - b).norm() < 1e-12;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
      while (k >= 2 &&
             (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 1e-12) {
        --k;
      }
      hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper
      while (k >= lower &&
             (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 1e-12) {
        --k;
      }
      hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
  }

 private:
  void derive_faces() {
    normals_.clear();
    offsets_.clear();
    const std::size_t n = vertices_.size();
    normals_.reserve(n);
    offsets_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 e = vertices_[(i + 1) % n] - vertices_[i];
      const Vec2 normal = Vec2{e.y, -e.x}.normalized();
      normals_.push_back(normal);
      offsets_.push_back(normal.dot(vertices_[i]));
    }
  }

  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
  std::vector<Vec2> vertices_;
};

namespace detail {

struct Simplex {
  Vec2 pts[3];
  int size = 0;

  void push(Vec2 p) { pts[size++] = p; }
  bool has(Vec2 p) const {
    for (int i = 0; i < size; ++i) {
      if ((pts[i] - p).norm_sq() < 1e-24) return true;
    }
    return false;
  }
};

/// Closest point to the origin on segment [a, b], reducing the simplex to
/// the supporting feature.
inline Vec2 closest_on_segment(Vec2 a, Vec2 b, Simplex& out) {
  const Vec2 ab = b - a;
  const double denom = ab.norm_sq();
  double t = denom > 0.0 ? -a.dot(ab) / denom : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  out.size = 0;
  if (t <= 0.0) {
    out.push(a);
    return a;
  }
  if (t >= 1.0) {
    out.push(b);
    return b;
  }
  out.push(a);
  out.push(b);
  return a + ab * t;
}

}  // namespace detail

/// Euclidean minimum distance between two convex polytopes; 0 if and only if
/// they intersect (touching counts as 0). GJK walk over support vertices,
/// which attains the same optimum as the quadratic program
/// min |y_p - y_q|^2 s.t. y_p in p, y_q in q.
/// Throws NonConvergenceError if the iteration cap is exceeded.
inline double polytope_distance(const ConvexPolytope& p,
                                const ConvexPolytope& q) {
  constexpr int kMaxIter = 200;
  constexpr double kZeroSq = 1e-22;

  const auto support_mink = [&](Vec2 dir) {
    return p.support(dir) - q.support(-dir);
  };

  Vec2 d0 = p.centroid() - q.centroid();
  if (d0.norm_sq() < 1e-18) d0 = {1.0, 0.0};

  detail::Simplex simplex;
  simplex.push(support_mink(-d0));
  Vec2 v = simplex.pts[0];

  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double vv = v.norm_sq();
    if (vv < kZeroSq) return 0.0;

    const Vec2 w = support_mink(-v);
    // No support point improves on v: v is the closest point.
    if (vv - v.dot(w) <= 1e-12 * vv || simplex.has(w)) {
      return std::sqrt(vv);
    }
    simplex.push(w);

    if (simplex.size == 2) {
      detail::Simplex next;
      v = detail::closest_on_segment(simplex.pts[0], simplex.pts[1], next);
      simplex = next;
      continue;
    }

    // Triangle: containment means intersection, otherwise keep the closest
    // edge that includes the newest point w.
    const Vec2 a = simplex.pts[0], b = simplex.pts[1], c = simplex.pts[2];
    const double area2 = (b - a).cross(c - a);
    const double s1 = (b - a).cross(-a);
    const double s2 = (c - b).cross(-b);
    const double s3 = (a - c).cross(-c);
    if ((area2 >= 0.0 && s1 >= 0.0 && s2 >= 0.0 && s3 >= 0.0) ||
        (area2 <= 0.0 && s1 <= 0.0 && s2 <= 0.0 && s3 <= 0.0)) {
      return 0.0;
    }
    detail::Simplex ac_next;
    const Vec2 on_ac = detail::closest_on_segment(a, c, ac_next);
    detail::Simplex bc_next;
    const Vec2 on_bc = detail::closest_on_segment(b, c, bc_next);
    if (on_ac.norm_sq() < on_bc.norm_sq()) {
      v = on_ac;
      simplex = ac_next;
    } else {
      v = on_bc;
      simplex = bc_next;
    }
  }
  throw NonConvergenceError("polytope_distance: GJK iteration cap exceeded");
}

/// Distance from a point to a convex polytope (0 inside).
inline double point_polytope_distance(Vec2 pt, const ConvexPolytope& poly) {
  if (poly.contains(pt, 0.0)) return 0.0;
  double best_sq = std::numeric_limits<double>::infinity();
  const auto& vs = poly.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vec2 a = vs[i];
    const Vec2 ab = vs[(i + 1) % vs.size()] - a;
    const double denom = ab.norm_sq();
    double t = denom > 0.0 ? (pt - a).dot(ab) / denom : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best_sq = std::min(best_sq, (pt - (a + ab * t)).norm_sq());
  }
  return std::sqrt(best_sq);
}

}  // namespace hjba

#endif  // HJBA_POLYTOPE_HPP_
