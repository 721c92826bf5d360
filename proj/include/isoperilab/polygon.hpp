#pragma once

#include <span>
#include <vector>

#include "isoperilab/errors.hpp"
#include "isoperilab/vec2.hpp"

namespace isoperilab {

/// Numeric slacks shared across the library. All tests against boundaries use
/// closed-set semantics: a margin of -geom still counts as inside.
struct Tolerances {
  double geom = 1e-9;  ///< geometric predicate slack (unit-scale data)
  double opt = 1e-9;   ///< optimizer step-size convergence threshold
  double area = 1e-9;  ///< area-normalization slack

  void validate() const {
    if (!(geom > 0.0 && opt > 0.0 && area > 0.0))
      throw BadParameter("tolerances must be positive");
    if (geom > area) throw BadParameter("geom tolerance must not exceed area tolerance");
  }
};

struct Disk {
  Vec2 center;
  double radius = 1.0;

  Disk(Vec2 c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw BadParameter("disk radius must be positive");
  }
};

/// Precomputed per-edge frame of a CCW polygon: the edge from a to b, its
/// unit direction, unit outward normal and the support offset dot(a, normal).
struct EdgeFrame {
  Vec2 a;
  Vec2 b;
  Vec2 dir;
  Vec2 normal;
  double offset = 0.0;
  double length = 0.0;
};

/// Immutable strictly convex polygon, vertices in CCW order starting from the
/// lexicographically smallest vertex. Construct through make_polygon.
class ConvexPolygon {
 public:
  const std::vector<Vec2>& vertices() const { return verts_; }
  const std::vector<EdgeFrame>& edges() const { return edges_; }
  std::size_t size() const { return verts_.size(); }
  Vec2 vertex(std::size_t i) const { return verts_[i]; }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  Vec2 centroid() const { return centroid_; }

  /// Max pairwise vertex distance; equals the diameter of the convex body.
  double diameter() const;

  /// Closed containment test: every half-plane margin >= -eps.
  bool contains(Vec2 p, double eps = 1e-9) const;

  /// Euclidean distance to the solid polygon (0 inside).
  double distance_to(Vec2 p) const;

  /// Euclidean distance to the polygon boundary (positive inside too).
  double boundary_distance(Vec2 p) const;

  friend ConvexPolygon make_polygon(std::span<const Vec2>, const Tolerances&);

 private:
  explicit ConvexPolygon(std::vector<Vec2> verts);

  std::vector<Vec2> verts_;
  std::vector<EdgeFrame> edges_;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  Vec2 centroid_;
};

/// Convex hull of the input points, CCW, collinear interior points removed;
/// idempotent on already-convex CCW input. Throws DegenerateInput when the
/// hull has fewer than 3 vertices or zero area.
ConvexPolygon make_polygon(std::span<const Vec2> points, const Tolerances& tol = {});

/// Homothety about the centroid so that area == pi (within tol.area).
ConvexPolygon normalize_area(const ConvexPolygon& p, const Tolerances& tol = {});

/// Homothety about the origin by factor s > 0.
ConvexPolygon scale(const ConvexPolygon& p, double s, const Tolerances& tol = {});

/// Distance from a point to a closed segment.
double dist_point_to_segment(Vec2 p, Vec2 a, Vec2 b);

/// Symmetric Hausdorff distance between two solid convex polygons. Distance
/// to a convex set is convex, so each one-sided sup is attained at a vertex.
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

/// Vertex-wise equality within eps, up to nothing: both polygons are stored
/// in canonical order, so the lists are compared index by index.
bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double eps = 1e-9);

}  // namespace isoperilab
