#pragma once

#include <functional>
#include <optional>

#include "isoperilab/polygon.hpp"

namespace isoperilab {

/// Below this deviation a shape counts as a ball and the ratio deficit /
/// deviation^2 is left undefined. The default sits below the discretization
/// error of a 256-gon.
struct BallExclusionPolicy {
  double eps_ball = 1e-4;
};

/// Per-shape bundle of the scalar functionals.
struct FunctionalReport {
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
  double equivalent_radius = 0.0;  ///< sqrt(area / pi)
  double deficit = 0.0;
  double lambda_h = 0.0;
  Vec2 lambda_h_center;
  std::optional<double> fraenkel;  ///< best-effort upper bound on the asymmetry
  std::optional<double> f;         ///< deficit / lambda_h^2; empty when ball
  bool ball = false;
};

/// Isoperimetric deficit (perimeter - 2 pi r) / (2 pi r) with r = sqrt(area/pi).
/// Nonnegative by the isoperimetric inequality.
double deficit(const ConvexPolygon& p);

/// sup over the polygon of the distance to the closed disk; attained at a
/// vertex since |y - z| is convex on the polygon.
double max_polygon_to_disk(const ConvexPolygon& p, const Disk& b);

/// sup over the closed disk of the distance to the solid polygon. Exact: the
/// sup lives on the circle, which decomposes into arcs by the polygon's
/// exterior feature regions; candidates are the per-edge antinormal point,
/// the per-vertex antipode, and the circle crossings of the region-boundary
/// rays. Falls back to dense circle sampling plus golden-section refinement
/// when the center sits numerically on a vertex.
double max_disk_to_polygon(const ConvexPolygon& p, const Disk& b);

/// Symmetric Hausdorff distance: max of the two one-sided sups above.
double hausdorff_to_disk(const ConvexPolygon& p, const Disk& b);

struct LambdaH {
  double value = 0.0;
  Vec2 center;
};

/// Deviation from the disk: min over centers z of d_H(P, B_r(z)) / r with
/// r = sqrt(area/pi). Inside P the objective is the max of per-vertex cone
/// terms and per-edge linear terms, so the minimization is solved exactly as
/// a small second-order-cone program (log-barrier Newton), then polished by a
/// short compass descent. Throws NoConvergence only if the descent fallback
/// is reached and exhausts its iteration cap.
LambdaH lambda_h(const ConvexPolygon& p, const Tolerances& tol = {});
LambdaH lambda_h(const ConvexPolygon& p, Vec2 center_hint, const Tolerances& tol = {});

/// Exact area of polygon-disk intersection via Green's theorem: polygon edges
/// clipped to the disk contribute triangle terms, the uncovered angular spans
/// contribute circular wedges.
double disk_polygon_intersection_area(const ConvexPolygon& p, const Disk& b);

/// Fraenkel asymmetry min over centers x of |P delta B_r(x)| / r^2, searched
/// by multi-start descent (centroid and the lambda_h center). The symmetric-
/// difference objective has no convexity proof, so the result is a certified
/// upper bound on the true asymmetry.
double fraenkel(const ConvexPolygon& p, const Tolerances& tol = {});

/// Full report; f = deficit / lambda_h^2 unless the shape is flagged as a
/// ball by the exclusion policy.
FunctionalReport shape_functional(const ConvexPolygon& p, const Tolerances& tol = {},
                                  const BallExclusionPolicy& policy = {},
                                  bool with_fraenkel = true);

namespace detail {

struct PatternResult {
  double value = 0.0;
  Vec2 argmin;
  long evals = 0;
};

/// Adaptive compass search over the plane: 8 fixed directions plus a rotated
/// pass, halving the step on failure, doubling it after repeated successes.
/// Deterministic. Throws NoConvergence past max_evals with step > h_min.
PatternResult pattern_search(const std::function<double(Vec2)>& f, Vec2 start, double h0,
                             double h_min, long max_evals = 200000);

}  // namespace detail

}  // namespace isoperilab
