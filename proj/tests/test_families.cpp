#include <doctest.h>

#include <cmath>

#include "isoperilab/cone.hpp"
#include "isoperilab/families.hpp"
#include "isoperilab/functionals.hpp"
#include "isoperilab/polygon.hpp"

using namespace isoperilab;

TEST_SUITE("families") {
  TEST_CASE("rectangle: geometry and parameter domain") {
    const ConvexPolygon p = rectangle(0.5);
    REQUIRE(p.size() == 4);
    CHECK(p.area() == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(p.vertex(0) == Vec2{-M_PI / 2.0, -0.5});
    CHECK(p.vertex(2) == Vec2{M_PI / 2.0, 0.5});
    CHECK(p.centroid().norm() < 1e-12);

    CHECK(rectangle_l_max() == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-16));
    CHECK_THROWS_AS(rectangle(0.0), BadParameter);
    CHECK_THROWS_AS(rectangle(-0.3), BadParameter);
    CHECK_THROWS_AS(rectangle(rectangle_l_max()), BadParameter);
    CHECK_THROWS_AS(rectangle(2.0), BadParameter);
    CHECK_NOTHROW(rectangle(rectangle_l_max() - 1e-9));
    CHECK_NOTHROW(rectangle(1e-6));
  }

  TEST_CASE("a_of_l: pinned values and limiting behavior") {
    CHECK(a_of_l(0.3) == doctest::Approx(0.32078102142225667).epsilon(1e-13));
    CHECK(a_of_l(0.5) == doctest::Approx(0.7569924934519715).epsilon(1e-13));
    CHECK(a_of_l(0.7) == doctest::Approx(1.5380576855921821).epsilon(1e-13));
    CHECK_THROWS_AS(a_of_l(0.0), BadParameter);
    CHECK_THROWS_AS(a_of_l(rectangle_l_max()), BadParameter);
    // a vanishes like 8l/pi as the rectangle degenerates.
    CHECK(a_of_l(0.001) < a_of_l(0.01));
    CHECK(a_of_l(0.01) < 0.05);
  }

  TEST_CASE("a_of_l is strictly increasing on a fine grid") {
    const double lo = 0.05, hi = rectangle_l_max() - 0.01;
    double prev = a_of_l(lo);
    for (int i = 1; i < 200; ++i) {
      const double l = lo + (hi - lo) * i / 199.0;
      const double cur = a_of_l(l);
      CHECK(cur > prev);
      prev = cur;
    }
  }

  TEST_CASE("pipeline F matches the closed form across the family") {
    for (double l : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
      const FunctionalReport rep = shape_functional(rectangle(l), {}, {}, false);
      REQUIRE(rep.f.has_value());
      INFO("l = ", l);
      CHECK(std::abs(*rep.f - a_of_l(l)) <= 1e-6);
    }
  }

  TEST_CASE("regular_ngon: area pi, vertex count, +x vertex, domain") {
    for (int n : {3, 4, 7, 64}) {
      const ConvexPolygon p = regular_ngon(n);
      CHECK(p.size() == static_cast<std::size_t>(n));
      CHECK(p.area() == doctest::Approx(M_PI).epsilon(1e-13));
      CHECK(p.centroid().norm() < 1e-12);
      bool on_plus_x = false;
      for (const Vec2& v : p.vertices()) on_plus_x = on_plus_x || (v.x > 0.0 && std::abs(v.y) < 1e-12);
      CHECK(on_plus_x);
    }
    CHECK_THROWS_AS(regular_ngon(2), BadParameter);
    CHECK_THROWS_AS(regular_ngon(0), BadParameter);
  }

  TEST_CASE("random_convex_body: deterministic, admissible, and can exhaust") {
    const ConvexPolygon a = random_convex_body(1, 8, 0.3);
    const ConvexPolygon b = random_convex_body(1, 8, 0.3);
    CHECK(approx_equal(a, b, 0.0));
    CHECK(a.area() == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(class_membership(a, 0.3));

    // Triangles can never satisfy the aperture-pi/2 condition, so m = 3 with
    // a demanding R must exhaust the retry budget.
    CHECK_THROWS_AS(random_convex_body(5, 3, 1.9), GenerationFailed);
    CHECK_THROWS_AS(random_convex_body(1, 2, 0.3), BadParameter);
    CHECK_THROWS_AS(random_convex_body(1, 8, 0.0), BadParameter);
  }

  TEST_CASE("perturbed_disk: normalization, determinism, zero-amplitude limit") {
    const ConvexPolygon p = perturbed_disk(128, 0.01, 7);
    CHECK(p.area() == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(deficit(p) < 0.01);
    CHECK(approx_equal(p, perturbed_disk(128, 0.01, 7), 0.0));
    CHECK_FALSE(approx_equal(p, perturbed_disk(128, 0.01, 8), 1e-9));

    // amplitude = 0 collapses to the bitwise regular n-gon.
    CHECK(approx_equal(perturbed_disk(64, 0.0, 3), regular_ngon(64), 0.0));

    CHECK_THROWS_AS(perturbed_disk(2, 0.01, 1), BadParameter);
    CHECK_THROWS_AS(perturbed_disk(16, -0.1, 1), BadParameter);
  }

  TEST_CASE("random_hull: deterministic area-pi bodies without a class gate") {
    const ConvexPolygon a = random_hull(11, 6);
    CHECK(a.area() == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(approx_equal(a, random_hull(11, 6), 0.0));
    CHECK_FALSE(approx_equal(a, random_hull(12, 6), 1e-9));
    CHECK_THROWS_AS(random_hull(1, 2), BadParameter);
    // Small draws frequently produce triangles, which are fine here.
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const ConvexPolygon h = random_hull(s, 3 + static_cast<int>(s % 5));
      CHECK(h.area() == doctest::Approx(M_PI).epsilon(1e-12));
      CHECK(h.size() >= 3);
    }
  }
}
