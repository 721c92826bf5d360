#include "isoperilab/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace isoperilab {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct DirectionalMargin {
  double margin;
  Vec2 direction;
};

/// Best containment margin over axis directions at a fixed apex. The hint is
/// tried first as an exact certificate; otherwise a 360-angle scan plus a
/// golden-section polish around the best angle approximates the maximum.
DirectionalMargin best_sector_direction(const ConvexPolygon& p, Vec2 x, double r_s,
                                        double aperture, Vec2 hint, const Tolerances& tol) {
  auto margin_at = [&](Vec2 axis) { return sector_margin(Sector(x, axis, r_s, aperture), p); };

  DirectionalMargin best{-std::numeric_limits<double>::infinity(), hint};
  if (hint.norm2() > 0.0) {
    best = {margin_at(hint), hint};
    if (best.margin >= -tol.geom) return best;
  }

  constexpr int kCoarse = 360;
  const double step = kTwoPi / kCoarse;
  for (int k = 0; k < kCoarse; ++k) {
    const Vec2 d = unit(k * step);
    const double m = margin_at(d);
    if (m > best.margin) best = {m, d};
  }

  const double center = std::atan2(best.direction.y, best.direction.x);
  double lo = center - step, hi = center + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
  double f1 = margin_at(unit(m1)), f2 = margin_at(unit(m2));
  for (int it = 0; it < 50; ++it) {
    if (f1 > f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - gr * (hi - lo);
      f1 = margin_at(unit(m1));
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + gr * (hi - lo);
      f2 = margin_at(unit(m2));
    }
  }
  if (f1 > best.margin) best = {f1, unit(m1)};
  if (f2 > best.margin) best = {f2, unit(m2)};
  return best;
}

Vec2 vertex_bisector(const ConvexPolygon& p, std::size_t i) {
  const auto& edges = p.edges();
  const std::size_t n = edges.size();
  const Vec2 b = edges[i].dir - edges[(i + n - 1) % n].dir;
  if (b.norm() > 1e-12) return b.normalized();
  return -edges[i].normal;
}

/// Angle certified feasible by bisection between a feasible angle `good` and
/// an infeasible angle `bad`; the returned boundary stays on the feasible side.
double refine_feasibility_boundary(const ConvexPolygon& p, Vec2 x, double r_s, double aperture,
                                   double good, double bad, const Tolerances& tol) {
  while (std::abs(good - bad) > 1e-6) {
    const double mid = 0.5 * (good + bad);
    if (sector_margin(Sector(x, unit(mid), r_s, aperture), p) >= -tol.geom)
      good = mid;
    else
      bad = mid;
  }
  return good;
}

}  // namespace

Sector::Sector(Vec2 vertex_, Vec2 axis_, double radius_, double aperture_)
    : vertex(vertex_), axis(axis_), radius(radius_), aperture(aperture_) {
  if (!(radius > 0.0)) throw BadParameter("sector radius must be positive");
  if (!(aperture > 0.0) || !(aperture < M_PI))
    throw BadParameter("sector aperture must lie in (0, pi)");
  const double n = axis.norm();
  if (!(n > 1e-12)) throw BadParameter("sector axis must be a nonzero vector");
  axis = axis / n;
}

void ClassSpec::validate() const {
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");
  if (!(aperture > 0.0) || !(aperture < M_PI))
    throw BadParameter("class aperture must lie in (0, pi)");
  if (edge_samples < 0) throw BadParameter("edge_samples must be nonnegative");
}

bool AngleInterval::contains(double angle) const {
  double t = std::fmod(angle - lo, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return lo + t <= hi || t == 0.0;
}

double sector_margin(const Sector& s, const ConvexPolygon& p) {
  const double c_half = std::cos(0.5 * s.aperture);
  const double s_half = std::sin(0.5 * s.aperture);
  double margin = std::numeric_limits<double>::infinity();
  for (const EdgeFrame& e : p.edges()) {
    const double cd = dot(s.axis, e.normal);
    const double sd = std::abs(cross(s.axis, e.normal));
    // Largest <u, n> over unit vectors u within aperture/2 of the axis: 1 when
    // the normal falls inside the angular range, else the nearer arc endpoint.
    const double cosmax = (cd >= c_half) ? 1.0 : cd * c_half + sd * s_half;
    const double support = dot(s.vertex, e.normal) + s.radius * std::max(cosmax, 0.0);
    margin = std::min(margin, e.offset - support);
  }
  return margin;
}

bool sector_in_polygon(const Sector& s, const ConvexPolygon& p, const Tolerances& tol) {
  tol.validate();
  return sector_margin(s, p) >= -tol.geom;
}

std::vector<AngleInterval> feasible_directions(const ConvexPolygon& p, Vec2 x, double r_s,
                                               const Tolerances& tol, double aperture) {
  tol.validate();
  if (!(r_s > 0.0)) throw BadParameter("sector radius must be positive");
  if (p.boundary_distance(x) > tol.geom)
    throw NotOnBoundary("point is not on the polygon boundary");

  constexpr int kScan = 3600;
  const double step = kTwoPi / kScan;
  std::vector<char> feas(kScan);
  int feasible_count = 0;
  for (int k = 0; k < kScan; ++k) {
    feas[k] = sector_margin(Sector(x, unit(k * step), r_s, aperture), p) >= -tol.geom;
    feasible_count += feas[k];
  }

  std::vector<AngleInterval> intervals;
  if (feasible_count == 0) return intervals;
  if (feasible_count == kScan) {
    intervals.push_back({0.0, kTwoPi});
    return intervals;
  }

  for (int k = 0; k < kScan; ++k) {
    if (!feas[k] || feas[(k + kScan - 1) % kScan]) continue;
    // Rising transition at k: refine the entry boundary, walk to the fall,
    // refine the exit boundary.
    const double lo =
        refine_feasibility_boundary(p, x, r_s, aperture, k * step, (k - 1) * step, tol);
    int j = k;
    while (feas[(j + 1) % kScan]) ++j;
    double hi = refine_feasibility_boundary(p, x, r_s, aperture, j * step, (j + 1) * step, tol);
    if (hi < lo) hi += kTwoPi;
    intervals.push_back({lo, hi});
  }
  return intervals;
}

ConeReport cone_condition(const ConvexPolygon& p, const ClassSpec& spec, const Tolerances& tol,
                          bool full_report) {
  spec.validate();
  tol.validate();
  const double r_eff = spec.R * std::sqrt(p.area() / M_PI);
  const auto& edges = p.edges();
  const std::size_t n = edges.size();

  ConeReport rep;
  rep.sector_radius = r_eff;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 v = edges[i].a;
    const auto dm = best_sector_direction(p, v, r_eff, spec.aperture, vertex_bisector(p, i), tol);
    if (dm.margin < rep.worst_margin) {
      rep.worst_margin = dm.margin;
      rep.worst_boundary_point = v;
      rep.worst_direction = dm.direction;
    }
    if (full_report) rep.samples.push_back({v, dm.direction, dm.margin});
    if (!full_report && dm.margin < -tol.geom) {
      rep.satisfied = false;
      return rep;
    }
  }
  rep.satisfied = rep.worst_margin >= -tol.geom;
  if (!full_report) return rep;

  // Diagnostic edge-interior sampling; informative only, never decisive.
  rep.edge_worst_margin = std::numeric_limits<double>::infinity();
  std::size_t worst_edge = 0;
  double worst_t = 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeFrame& e = edges[i];
    for (int j = 1; j <= spec.edge_samples; ++j) {
      const double t = static_cast<double>(j) / (spec.edge_samples + 1);
      const Vec2 pt = e.a + e.dir * (t * e.length);
      const auto dm = best_sector_direction(p, pt, r_eff, spec.aperture, -e.normal, tol);
      rep.samples.push_back({pt, dm.direction, dm.margin});
      if (dm.margin < rep.edge_worst_margin) {
        rep.edge_worst_margin = dm.margin;
        rep.edge_worst_point = pt;
        worst_edge = i;
        worst_t = t;
      }
    }
  }
  if (spec.edge_samples > 0) {
    // Two rounds of midpoint refinement around the worst edge sample.
    double spacing = 1.0 / (spec.edge_samples + 1);
    const EdgeFrame& e = edges[worst_edge];
    for (int round = 0; round < 2; ++round) {
      spacing *= 0.5;
      for (const double t : {worst_t - spacing, worst_t + spacing}) {
        if (t <= 0.0 || t >= 1.0) continue;
        const Vec2 pt = e.a + e.dir * (t * e.length);
        const auto dm = best_sector_direction(p, pt, r_eff, spec.aperture, -e.normal, tol);
        rep.samples.push_back({pt, dm.direction, dm.margin});
        if (dm.margin < rep.edge_worst_margin) {
          rep.edge_worst_margin = dm.margin;
          rep.edge_worst_point = pt;
          worst_t = t;
        }
      }
    }
  }

  rep.vertex_intervals.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    rep.vertex_intervals.push_back(feasible_directions(p, edges[i].a, r_eff, tol, spec.aperture));
  return rep;
}

bool class_membership(const ConvexPolygon& p, double R, const Tolerances& tol) {
  tol.validate();
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");
  if (std::abs(p.area() - M_PI) > tol.area) return false;
  return cone_condition(p, ClassSpec{R}, tol, false).satisfied;
}

}  // namespace isoperilab
