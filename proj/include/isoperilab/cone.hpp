#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "isoperilab/errors.hpp"
#include "isoperilab/polygon.hpp"
#include "isoperilab/vec2.hpp"

namespace isoperilab {

/// Planar circular sector: vertex (apex), unit axis, radius, aperture.
/// Equals {y : |y-x| < R_s, <y-x, axis> > cos(aperture/2)|y-x|} plus its closure.
struct Sector {
  Vec2 vertex;
  Vec2 axis;
  double radius;
  double aperture;

  Sector(Vec2 vertex_, Vec2 axis_, double radius_, double aperture_ = M_PI / 2.0);
};

/// Parameters of the interior-cone class: sector radius scales as
/// R * sqrt(area/pi), aperture pi/2 by default. `edge_samples` controls the
/// density of the diagnostic edge-interior sampling in full reports.
struct ClassSpec {
  double R = 1.0;
  double aperture = M_PI / 2.0;
  int edge_samples = 64;

  void validate() const;
};

/// Closed angular interval of feasible axis directions, radians.
/// `hi` may exceed 2*pi when the interval wraps around.
struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double angle) const;
  double width() const { return hi - lo; }
};

/// One boundary point inspected by cone_condition, with the best axis found
/// and its containment margin.
struct CheckedPoint {
  Vec2 point;
  Vec2 direction;
  double margin;
};

/// Verdict of the interior-cone check. The decision is taken at the polygon's
/// vertices (its extreme points); edge-interior samples are reported for
/// diagnostics only and do not affect `satisfied`.
struct ConeReport {
  bool satisfied = false;
  Vec2 worst_boundary_point{};
  double worst_margin = 0.0;
  Vec2 worst_direction{};
  double sector_radius = 0.0;
  /// Worst margin seen among diagnostic edge-interior samples (NaN when the
  /// diagnostics were not requested). Strict edge-interior containment can be
  /// tighter than the vertex criterion.
  double edge_worst_margin = std::numeric_limits<double>::quiet_NaN();
  Vec2 edge_worst_point{};
  std::vector<CheckedPoint> samples;                         // full reports only
  std::vector<std::vector<AngleInterval>> vertex_intervals;  // full reports only
};

/// Smallest slack, over all edge half-planes of `p`, between the half-plane
/// offset and the sector's support in the outward-normal direction.
/// Nonnegative iff the closed sector is contained in `p`.
double sector_margin(const Sector& s, const ConvexPolygon& p);

/// Exact containment test with closed-sector semantics (touching counts,
/// tolerance tol.geom).
bool sector_in_polygon(const Sector& s, const ConvexPolygon& p, const Tolerances& tol = {});

/// All axis angles for which a sector of radius `r_s` with apex `x` fits in
/// `p`: 3600-angle scan, each feasibility boundary refined by bisection to
/// 1e-6 rad, conservatively keeping the certified-feasible side.
/// Throws NotOnBoundary when `x` is farther than tol.geom from the boundary.
std::vector<AngleInterval> feasible_directions(const ConvexPolygon& p, Vec2 x, double r_s,
                                               const Tolerances& tol = {},
                                               double aperture = M_PI / 2.0);

/// Interior-cone check with effective radius spec.R * sqrt(area/pi), decided
/// at the polygon's vertices. With `full_report` the report also carries the
/// per-vertex feasible intervals and the diagnostic edge-interior sampling
/// (spec.edge_samples per edge, midpoint-refined near the worst margin).
ConeReport cone_condition(const ConvexPolygon& p, const ClassSpec& spec, const Tolerances& tol = {},
                          bool full_report = false);

/// Membership in the area-normalized interior-cone class: area equals pi
/// within tol.area and the cone condition holds with effective radius R.
bool class_membership(const ConvexPolygon& p, double R, const Tolerances& tol = {});

}  // namespace isoperilab
