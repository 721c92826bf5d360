#include "isoperilab/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoperilab/predicates.hpp"

namespace isoperilab {

ConvexPolygon::ConvexPolygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {
  const std::size_t n = verts_.size();
  edges_.resize(n);
  double a2 = 0.0;  // twice the signed area
  Vec2 csum{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = verts_[i];
    const Vec2 q = verts_[(i + 1) % n];
    const double c = cross(p, q);
    a2 += c;
    csum = csum + (p + q) * c;

    EdgeFrame& e = edges_[i];
    e.a = p;
    e.b = q;
    e.length = distance(p, q);
    e.dir = (q - p) / e.length;
    e.normal = e.dir.perp_cw();
    e.offset = dot(p, e.normal);
    perimeter_ += e.length;
  }
  area_ = 0.5 * a2;
  centroid_ = csum / (3.0 * a2);
}

double ConvexPolygon::diameter() const {
  double best2 = 0.0;
  for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j)
      best2 = std::max(best2, (verts_[i] - verts_[j]).norm2());
  return std::sqrt(best2);
}

bool ConvexPolygon::contains(Vec2 p, double eps) const {
  for (const EdgeFrame& e : edges_)
    if (dot(p, e.normal) - e.offset > eps) return false;
  return true;
}

double dist_point_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double t = dot(p - a, ab) / ab.norm2();
  if (t <= 0.0) return distance(p, a);
  if (t >= 1.0) return distance(p, b);
  return distance(p, a + ab * t);
}

double ConvexPolygon::distance_to(Vec2 p) const {
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (const EdgeFrame& e : edges_) {
    if (dot(p, e.normal) - e.offset > 0.0) inside = false;
  }
  if (inside) return 0.0;
  for (const EdgeFrame& e : edges_) best = std::min(best, dist_point_to_segment(p, e.a, e.b));
  return best;
}

double ConvexPolygon::boundary_distance(Vec2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const EdgeFrame& e : edges_) best = std::min(best, dist_point_to_segment(p, e.a, e.b));
  return best;
}

ConvexPolygon make_polygon(std::span<const Vec2> points, const Tolerances& tol) {
  tol.validate();
  if (points.size() < 3) throw DegenerateInput("need at least 3 points");

  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("fewer than 3 distinct points");

  // Andrew's monotone chain with exact turn signs; strict left turns only, so
  // collinear interior points are dropped. Lexicographic sort breaks ties.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {  // lower hull
    while (k >= 2 && orient2d_sign(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper hull
    while (k >= lower && orient2d_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first

  // Merge near-duplicate consecutive vertices (cyclic).
  std::vector<Vec2> verts;
  verts.reserve(hull.size());
  for (const Vec2& p : hull) {
    if (!verts.empty() && distance(verts.back(), p) <= tol.geom) continue;
    verts.push_back(p);
  }
  while (verts.size() >= 2 && distance(verts.front(), verts.back()) <= tol.geom)
    verts.pop_back();

  if (verts.size() < 3) throw DegenerateInput("hull has fewer than 3 vertices");
  return ConvexPolygon(std::move(verts));
}

ConvexPolygon normalize_area(const ConvexPolygon& p, const Tolerances& tol) {
  const double s = std::sqrt(M_PI / p.area());
  const Vec2 c = p.centroid();
  std::vector<Vec2> verts;
  verts.reserve(p.size());
  for (const Vec2& v : p.vertices()) verts.push_back(c + (v - c) * s);
  return make_polygon(verts, tol);
}

ConvexPolygon scale(const ConvexPolygon& p, double s, const Tolerances& tol) {
  if (!(s > 0.0)) throw BadParameter("scale factor must be positive");
  std::vector<Vec2> verts;
  verts.reserve(p.size());
  for (const Vec2& v : p.vertices()) verts.push_back(v * s);
  return make_polygon(verts, tol);
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  double h = 0.0;
  for (const Vec2& v : p.vertices()) h = std::max(h, q.distance_to(v));
  for (const Vec2& v : q.vertices()) h = std::max(h, p.distance_to(v));
  return h;
}

bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double eps) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (distance(p.vertex(i), q.vertex(i)) > eps) return false;
  return true;
}

}  // namespace isoperilab
