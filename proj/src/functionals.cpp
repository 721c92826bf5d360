#include "isoperilab/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace isoperilab {
namespace {

double equivalent_radius(const ConvexPolygon& p) { return std::sqrt(p.area() / M_PI); }

/// Dense-sampling fallback for max_disk_to_polygon: 4096 circle samples, then
/// golden-section refinement around the best one.
double sampled_circle_max(const ConvexPolygon& p, const Disk& b) {
  constexpr int kSamples = 4096;
  const double step = 2.0 * M_PI / kSamples;
  double best = 0.0;
  int best_k = 0;
  for (int k = 0; k < kSamples; ++k) {
    const double a = k * step;
    const double d = p.distance_to(b.center + Vec2{std::cos(a), std::sin(a)} * b.radius);
    if (d > best) {
      best = d;
      best_k = k;
    }
  }
  auto eval = [&](double a) {
    return p.distance_to(b.center + Vec2{std::cos(a), std::sin(a)} * b.radius);
  };
  double lo = (best_k - 1) * step, hi = (best_k + 1) * step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
  double f1 = eval(m1), f2 = eval(m2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + gr * (hi - lo);
      f2 = eval(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - gr * (hi - lo);
      f1 = eval(m1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

/// Signed contribution of one polygon edge to the polygon-disk intersection
/// area: the edge is split at its circle crossings; pieces inside the disk
/// contribute the triangle (center, piece), pieces outside contribute the
/// circular wedge spanning the same angle.
double edge_disk_contribution(Vec2 z, double r, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const Vec2 az = a - z;
  const double qa = d.norm2();
  const double qb = 2.0 * dot(d, az);
  const double qc = az.norm2() - r * r;

  std::array<double, 4> ts{0.0, 1.0, 1.0, 1.0};
  int nts = 1;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
    double t1 = q / qa;
    double t2 = (q != 0.0) ? qc / q : t1;
    if (t1 > t2) std::swap(t1, t2);
    if (t1 > 0.0 && t1 < 1.0) ts[nts++] = t1;
    if (t2 > 0.0 && t2 < 1.0 && t2 != t1) ts[nts++] = t2;
  }
  ts[nts++] = 1.0;
  std::sort(ts.begin(), ts.begin() + nts);

  double area = 0.0;
  for (int i = 0; i + 1 < nts; ++i) {
    const double u = ts[i], v = ts[i + 1];
    if (v - u < 1e-15) continue;
    const Vec2 pu = az + d * u;
    const Vec2 pv = az + d * v;
    const Vec2 pm = az + d * (0.5 * (u + v));
    // Strict margin: a tangent segment must take the wedge branch, where the
    // chord/arc discrepancy vanishes; classifying it as a chord does not.
    if (pm.norm2() < r * r * (1.0 - 1e-12))
      area += 0.5 * cross(pu, pv);
    else
      area += 0.5 * r * r * std::atan2(cross(pu, pv), dot(pu, pv));
  }
  return area;
}

const std::array<Vec2, 16>& compass_directions() {
  static const std::array<Vec2, 16> dirs = [] {
    std::array<Vec2, 16> d{};
    for (int k = 0; k < 16; ++k) {
      const double a = k * M_PI / 8.0;
      d[k] = {std::cos(a), std::sin(a)};
    }
    return d;
  }();
  return dirs;
}

/// d_H(P, B_r(z)) = max(max_j |v_j - z| - r, max_i <n_i, z> - o_i + r) for any
/// z in P, and projecting z onto P decreases both families, so minimizing the
/// max of these pieces over the whole plane solves the center problem exactly.
/// Epigraph form: minimize t s.t. |v_j - z| <= r + t and <n_i,z> - o_i + r <= t
/// -- a three-variable second-order-cone program, solved here with a primal
/// log-barrier Newton method. The max is nonsmooth at piece ties, which stalls
/// compass search in narrow kink valleys; the barrier is immune to that.
Vec2 lambda_h_center_socp(const ConvexPolygon& p, double r, Vec2 start) {
  const auto& verts = p.vertices();
  const auto& edges = p.edges();
  const std::size_t nv = verts.size(), ne = edges.size();
  const double nu = 2.0 * static_cast<double>(nv) + static_cast<double>(ne);

  auto piece_max = [&](Vec2 z) {
    double m = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : verts) m = std::max(m, distance(v, z) - r);
    for (const EdgeFrame& e : edges) m = std::max(m, dot(e.normal, z) - e.offset + r);
    return m;
  };

  // Strictly feasible start: every slack is at least 0.5 r.
  double x[3] = {start.x, start.y, piece_max(start) + 0.5 * r};

  // beta t - sum log((r+t)^2 - |v-z|^2) - sum log(t + o - r - <n,z>), or NaN
  // outside the interior so that the line search rejects infeasible steps.
  auto barrier = [&](const double w[3], double beta) {
    const double rt = r + w[2];
    double f = beta * w[2];
    for (const Vec2& v : verts) {
      const double s = rt * rt - (v - Vec2{w[0], w[1]}).norm2();
      if (!(s > 0.0)) return std::numeric_limits<double>::quiet_NaN();
      f -= std::log(s);
    }
    for (const EdgeFrame& e : edges) {
      const double l = w[2] + e.offset - r - (e.normal.x * w[0] + e.normal.y * w[1]);
      if (!(l > 0.0)) return std::numeric_limits<double>::quiet_NaN();
      f -= std::log(l);
    }
    return f;
  };

  const double beta_final = nu * 1e11;
  for (double beta = 16.0; beta <= beta_final * 16.0; beta *= 16.0) {
    double fx = barrier(x, beta);
    for (int iter = 0; iter < 60; ++iter) {
      // Assemble gradient and Hessian of the barrier at x.
      double g[3] = {0.0, 0.0, beta};
      double H[3][3] = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
      const double rt = r + x[2];
      for (const Vec2& v : verts) {
        const double wx = v.x - x[0], wy = v.y - x[1];
        const double s = rt * rt - (wx * wx + wy * wy);
        const double ds[3] = {2.0 * wx, 2.0 * wy, 2.0 * rt};
        for (int a = 0; a < 3; ++a) {
          g[a] -= ds[a] / s;
          for (int b = 0; b < 3; ++b) H[a][b] += ds[a] * ds[b] / (s * s);
        }
        H[0][0] += 2.0 / s;
        H[1][1] += 2.0 / s;
        H[2][2] -= 2.0 / s;
      }
      for (const EdgeFrame& e : edges) {
        const double l = x[2] + e.offset - r - (e.normal.x * x[0] + e.normal.y * x[1]);
        const double a3[3] = {-e.normal.x, -e.normal.y, 1.0};
        for (int a = 0; a < 3; ++a) {
          g[a] -= a3[a] / l;
          for (int b = 0; b < 3; ++b) H[a][b] += a3[a] * a3[b] / (l * l);
        }
      }

      // Newton direction via the adjugate; regularize if the solve is unusable.
      double d[3] = {0.0, 0.0, 0.0};
      for (int attempt = 0; attempt < 2; ++attempt) {
        const double det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                           H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                           H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
        if (std::isfinite(det) && det != 0.0) {
          const double inv[3][3] = {
              {(H[1][1] * H[2][2] - H[1][2] * H[2][1]) / det,
               (H[0][2] * H[2][1] - H[0][1] * H[2][2]) / det,
               (H[0][1] * H[1][2] - H[0][2] * H[1][1]) / det},
              {(H[1][2] * H[2][0] - H[1][0] * H[2][2]) / det,
               (H[0][0] * H[2][2] - H[0][2] * H[2][0]) / det,
               (H[0][2] * H[1][0] - H[0][0] * H[1][2]) / det},
              {(H[1][0] * H[2][1] - H[1][1] * H[2][0]) / det,
               (H[0][1] * H[2][0] - H[0][0] * H[2][1]) / det,
               (H[0][0] * H[1][1] - H[0][1] * H[1][0]) / det}};
          for (int a = 0; a < 3; ++a)
            d[a] = -(inv[a][0] * g[0] + inv[a][1] * g[1] + inv[a][2] * g[2]);
        }
        const double gd = g[0] * d[0] + g[1] * d[1] + g[2] * d[2];
        if (std::isfinite(d[0] + d[1] + d[2]) && gd < 0.0) break;
        for (int a = 0; a < 3; ++a) H[a][a] += 1.0 + std::abs(H[a][a]) * 1e-8;
        d[0] = d[1] = d[2] = 0.0;
      }
      const double decrement = -(g[0] * d[0] + g[1] * d[1] + g[2] * d[2]);
      if (!(decrement > 0.0)) break;

      // Backtracking line search keeping the iterate strictly feasible.
      double alpha = 1.0;
      double trial[3];
      double ft = std::numeric_limits<double>::quiet_NaN();
      for (int bt = 0; bt < 70; ++bt) {
        for (int a = 0; a < 3; ++a) trial[a] = x[a] + alpha * d[a];
        ft = barrier(trial, beta);
        if (std::isfinite(ft) && ft <= fx - 1e-4 * alpha * decrement) break;
        alpha *= 0.5;
        ft = std::numeric_limits<double>::quiet_NaN();
      }
      if (!std::isfinite(ft)) break;
      const double step2 = alpha * alpha * (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
      for (int a = 0; a < 3; ++a) x[a] = trial[a];
      fx = ft;
      if (decrement < 1e-13 * (1.0 + std::abs(fx)) || step2 < 1e-30) break;
    }
  }
  return {x[0], x[1]};
}

}  // namespace

double deficit(const ConvexPolygon& p) {
  const double circ = 2.0 * M_PI * equivalent_radius(p);
  return (p.perimeter() - circ) / circ;
}

double max_polygon_to_disk(const ConvexPolygon& p, const Disk& b) {
  double best = 0.0;
  for (const Vec2& v : p.vertices()) best = std::max(best, distance(v, b.center) - b.radius);
  return best;
}

double max_disk_to_polygon(const ConvexPolygon& p, const Disk& b) {
  const Vec2 z = b.center;
  const double r = b.radius;
  const auto& edges = p.edges();
  const std::size_t n = edges.size();
  double best = 0.0;
  bool degenerate = false;

  // Per-edge antinormal point z + r n: farthest circle point beyond the edge
  // line; counts only if its foot lies on the segment.
  for (const EdgeFrame& e : edges) {
    const double t = dot(z, e.normal) - e.offset + r;
    if (t <= best) continue;
    const Vec2 x = z + e.normal * r;
    const double s = dot(x - e.a, e.dir);
    if (s >= 0.0 && s <= e.length) best = t;
  }

  // Per-vertex antipode z + r (z-v)/|z-v|: counts only inside v's normal cone.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 v = edges[i].a;
    const Vec2 w = z - v;
    const double dist_zv = w.norm();
    if (dist_zv < 1e-13) {
      degenerate = true;
      continue;
    }
    const double val = dist_zv + r;
    if (val <= best) continue;
    const Vec2 x = z + w * (r / dist_zv);
    const Vec2 u_next = edges[i].dir;
    const Vec2 u_prev = -edges[(i + n - 1) % n].dir;
    if (dot(x - v, u_next) <= 0.0 && dot(x - v, u_prev) <= 0.0) best = val;
  }

  // Region-boundary rays from each vertex along its incident edge normals:
  // on such a ray the polygon distance equals the ray parameter, so circle
  // crossings are exact candidates.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 v = edges[i].a;
    for (const Vec2 nrm : {edges[i].normal, edges[(i + n - 1) % n].normal}) {
      const double bb = dot(v - z, nrm);
      const double cc = (v - z).norm2() - r * r;
      const double disc = bb * bb - cc;
      if (disc < 0.0) continue;
      const double sq = std::sqrt(disc);
      best = std::max(best, -bb + sq);
    }
  }

  if (degenerate) best = std::max(best, sampled_circle_max(p, b));
  return best;
}

double hausdorff_to_disk(const ConvexPolygon& p, const Disk& b) {
  return std::max(max_polygon_to_disk(p, b), max_disk_to_polygon(p, b));
}

namespace detail {

PatternResult pattern_search(const std::function<double(Vec2)>& f, Vec2 start, double h0,
                             double h_min, long max_evals) {
  const auto& dirs = compass_directions();
  Vec2 z = start;
  double fz = f(z);
  long evals = 1;
  double h = h0;
  int streak = 0;
  while (h > h_min) {
    // First the axis-aligned 8 directions, then the rotated 8 if none helped.
    int best_k = -1;
    double best_f = fz;
    for (int pass = 0; pass < 2 && best_k < 0; ++pass) {
      for (int k = pass; k < 16; k += 2) {
        const double fc = f(z + dirs[k] * h);
        ++evals;
        if (fc < best_f) {
          best_f = fc;
          best_k = k;
        }
      }
    }
    if (best_k >= 0) {
      z = z + dirs[best_k] * h;
      fz = best_f;
      if (++streak >= 2) {
        h = std::min(2.0 * h, h0);
        streak = 0;
      }
    } else {
      h *= 0.5;
      streak = 0;
    }
    if (evals > max_evals && h > h_min)
      throw NoConvergence("pattern search exceeded its evaluation cap");
  }
  return {fz, z, evals};
}

}  // namespace detail

LambdaH lambda_h(const ConvexPolygon& p, const Tolerances& tol) {
  return lambda_h(p, p.centroid(), tol);
}

LambdaH lambda_h(const ConvexPolygon& p, Vec2 center_hint, const Tolerances& tol) {
  tol.validate();
  const double r = equivalent_radius(p);
  auto objective = [&](Vec2 z) { return hausdorff_to_disk(p, Disk(z, r)) / r; };

  Vec2 best = lambda_h_center_socp(p, r, center_hint);
  double best_value = objective(best);
  if (!std::isfinite(best_value)) {  // safety net: plain descent from the hint
    const auto res = detail::pattern_search(objective, center_hint, 0.5 * r, tol.opt);
    return {res.value, res.argmin};
  }

  // Short local polish; from the barrier optimum it only sharpens the value.
  const auto res =
      detail::pattern_search(objective, best, std::max(1e-6, 16.0 * tol.opt), tol.opt);
  if (res.value < best_value) {
    best_value = res.value;
    best = res.argmin;
  }
  return {best_value, best};
}

double disk_polygon_intersection_area(const ConvexPolygon& p, const Disk& b) {
  double area = 0.0;
  for (const EdgeFrame& e : p.edges()) area += edge_disk_contribution(b.center, b.radius, e.a, e.b);
  return std::max(area, 0.0);
}

double fraenkel(const ConvexPolygon& p, const Tolerances& tol) {
  tol.validate();
  const double r = equivalent_radius(p);
  const double ball_area = M_PI * r * r;
  auto objective = [&](Vec2 x) {
    return (p.area() + ball_area - 2.0 * disk_polygon_intersection_area(p, Disk(x, r))) / (r * r);
  };
  const Vec2 c = p.centroid();
  const Vec2 hc = lambda_h(p, tol).center;
  double best = detail::pattern_search(objective, c, 0.5 * r, tol.opt).value;
  if (distance(c, hc) > tol.opt)
    best = std::min(best, detail::pattern_search(objective, hc, 0.5 * r, tol.opt).value);
  return best;
}

FunctionalReport shape_functional(const ConvexPolygon& p, const Tolerances& tol,
                                  const BallExclusionPolicy& policy, bool with_fraenkel) {
  FunctionalReport rep;
  rep.area = p.area();
  rep.perimeter = p.perimeter();
  rep.diameter = p.diameter();
  rep.equivalent_radius = equivalent_radius(p);
  rep.deficit = deficit(p);
  const LambdaH lh = lambda_h(p, tol);
  rep.lambda_h = lh.value;
  rep.lambda_h_center = lh.center;
  if (with_fraenkel) {
    const double r = rep.equivalent_radius;
    const double ball_area = M_PI * r * r;
    auto objective = [&](Vec2 x) {
      return (p.area() + ball_area - 2.0 * disk_polygon_intersection_area(p, Disk(x, r))) /
             (r * r);
    };
    double best = detail::pattern_search(objective, p.centroid(), 0.5 * r, tol.opt).value;
    if (distance(p.centroid(), lh.center) > tol.opt)
      best = std::min(best, detail::pattern_search(objective, lh.center, 0.5 * r, tol.opt).value);
    rep.fraenkel = best;
  }
  rep.ball = rep.lambda_h <= policy.eps_ball;
  if (!rep.ball) rep.f = rep.deficit / (rep.lambda_h * rep.lambda_h);
  return rep;
}

}  // namespace isoperilab
