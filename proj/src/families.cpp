#include "isoperilab/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "isoperilab/cone.hpp"
#include "isoperilab/errors.hpp"
#include "isoperilab/rng.hpp"

namespace isoperilab {
namespace {

void check_rectangle_param(double l) {
  if (!(l > 0.0) || !(l < rectangle_l_max()))
    throw BadParameter("rectangle parameter l must lie in (0, sqrt(pi)/2), got " +
                       std::to_string(l));
}

double ngon_circumradius(int n) { return std::sqrt(2.0 * M_PI / (n * std::sin(2.0 * M_PI / n))); }

ConvexPolygon radial_ngon(int n, const std::vector<double>& radii) {
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n;
    pts[static_cast<std::size_t>(k)] = Vec2{std::cos(angle), std::sin(angle)} * radii[k];
  }
  return normalize_area(make_polygon(pts));
}

}  // namespace

double rectangle_l_max() { return 0.5 * std::sqrt(M_PI); }

ConvexPolygon rectangle(double l) {
  check_rectangle_param(l);
  const double L = M_PI / (4.0 * l);
  const Vec2 corners[] = {{-L, -l}, {L, -l}, {L, l}, {-L, l}};
  return make_polygon(corners);
}

double a_of_l(double l) {
  check_rectangle_param(l);
  const double L = M_PI / (4.0 * l);
  const double num = 2.0 * (L + l) - M_PI;
  const double dev = std::max(1.0 - l, std::hypot(L, l) - 1.0);
  return num / (M_PI * dev * dev);
}

ConvexPolygon regular_ngon(int n) {
  if (n < 3) throw BadParameter("regular polygon needs n >= 3, got " + std::to_string(n));
  return radial_ngon(n, std::vector<double>(static_cast<std::size_t>(n), ngon_circumradius(n)));
}

ConvexPolygon random_convex_body(std::uint64_t seed, int m, double R, const Tolerances& tol) {
  if (m < 3) throw BadParameter("random convex body needs m >= 3, got " + std::to_string(m));
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");
  tol.validate();
  Rng rng(seed);
  std::vector<Vec2> pts(static_cast<std::size_t>(m));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (Vec2& p : pts) p = rng.disk_point(1.0);
    try {
      const ConvexPolygon body = normalize_area(make_polygon(pts));
      if (class_membership(body, R, tol)) return body;
    } catch (const DegenerateInput&) {
      // Collinear draw: counts as a rejection.
    }
  }
  throw GenerationFailed("no admissible body after 10000 rejections (R = " + std::to_string(R) +
                         ", m = " + std::to_string(m) + ")");
}

ConvexPolygon perturbed_disk(int n, double amplitude, std::uint64_t seed) {
  if (n < 3) throw BadParameter("perturbed disk needs n >= 3, got " + std::to_string(n));
  if (amplitude < 0.0) throw BadParameter("perturbation amplitude must be nonnegative");
  Rng rng(seed);
  const double rho = ngon_circumradius(n);
  std::vector<double> radii(static_cast<std::size_t>(n));
  for (double& r : radii) r = rho * (1.0 + rng.uniform(-amplitude, amplitude));
  return radial_ngon(n, radii);
}

ConvexPolygon random_hull(std::uint64_t seed, int m) {
  if (m < 3) throw BadParameter("random hull needs m >= 3, got " + std::to_string(m));
  Rng rng(seed);
  std::vector<Vec2> pts(static_cast<std::size_t>(m));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (Vec2& p : pts) p = rng.disk_point(1.0);
    try {
      return normalize_area(make_polygon(pts));
    } catch (const DegenerateInput&) {
    }
  }
  throw GenerationFailed("degenerate draws exhausted the retry budget");
}

}  // namespace isoperilab
