#include <doctest.h>

#include <cmath>
#include <vector>

#include "isoperilab/cone.hpp"
#include "isoperilab/families.hpp"
#include "isoperilab/polygon.hpp"

using namespace isoperilab;

namespace {

ConvexPolygon square(double half) {
  const std::vector<Vec2> pts{{-half, -half}, {half, -half}, {half, half}, {-half, half}};
  return make_polygon(pts);
}

const double kDiagX = std::sqrt(0.5);

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("sector construction validates its parameters") {
    CHECK_NOTHROW(Sector({0.0, 0.0}, {2.0, 0.0}, 1.0));
    CHECK(Sector({0.0, 0.0}, {2.0, 0.0}, 1.0).axis.norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(Sector({0.0, 0.0}, {1.0, 0.0}, 0.0), BadParameter);
    CHECK_THROWS_AS(Sector({0.0, 0.0}, {1.0, 0.0}, -1.0), BadParameter);
    CHECK_THROWS_AS(Sector({0.0, 0.0}, {1.0, 0.0}, 1.0, 0.0), BadParameter);
    CHECK_THROWS_AS(Sector({0.0, 0.0}, {1.0, 0.0}, 1.0, M_PI), BadParameter);
    CHECK_THROWS_AS(Sector({0.0, 0.0}, {0.0, 0.0}, 1.0), BadParameter);
  }

  TEST_CASE("class spec validates") {
    ClassSpec spec;
    CHECK_NOTHROW(spec.validate());
    spec.R = 0.0;
    CHECK_THROWS_AS(spec.validate(), BadParameter);
    spec = ClassSpec{};
    spec.aperture = M_PI;
    CHECK_THROWS_AS(spec.validate(), BadParameter);
    spec = ClassSpec{};
    spec.edge_samples = -1;
    CHECK_THROWS_AS(spec.validate(), BadParameter);
  }

  TEST_CASE("sector_margin: centered sector in the unit square") {
    const ConvexPolygon p = square(1.0);
    // Apex at the center pointing +x, radius 0.5: the binding half-plane is
    // the right edge, margin 1 - 0.5.
    CHECK(sector_margin(Sector({0.0, 0.0}, {1.0, 0.0}, 0.5), p) == doctest::Approx(0.5));
    // Radius 1.5 pokes out by 0.5.
    CHECK(sector_margin(Sector({0.0, 0.0}, {1.0, 0.0}, 1.5), p) == doctest::Approx(-0.5));
    CHECK(sector_in_polygon(Sector({0.0, 0.0}, {1.0, 0.0}, 0.5), p));
    CHECK_FALSE(sector_in_polygon(Sector({0.0, 0.0}, {1.0, 0.0}, 1.5), p));
  }

  TEST_CASE("diagonal sector at a rectangle corner: exact threshold 2l") {
    const ConvexPolygon p = rectangle(0.5);
    const Vec2 corner{-M_PI / 2.0, -0.5};
    const Vec2 diag{kDiagX, kDiagX};
    // Radius 2l = 1.0 fits exactly (touching counts).
    CHECK(sector_in_polygon(Sector(corner, diag, 1.0), p));
    CHECK(sector_margin(Sector(corner, diag, 1.0), p) == doctest::Approx(0.0));
    // Any larger radius pokes through the opposite long edge.
    CHECK_FALSE(sector_in_polygon(Sector(corner, diag, 1.0 + 1e-6), p));
    CHECK(sector_margin(Sector(corner, diag, 1.8), p) < -0.5);
    // A big surrounding square admits a generous sector anywhere.
    CHECK(sector_in_polygon(Sector({0.0, 0.0}, {0.3, 1.0}, 40.0), square(100.0)));
  }

  TEST_CASE("angle intervals: membership with wrap-around") {
    const AngleInterval plain{0.5, 1.5};
    CHECK(plain.contains(0.5));
    CHECK(plain.contains(1.0));
    CHECK(plain.contains(1.5));
    CHECK_FALSE(plain.contains(1.6));
    CHECK(plain.contains(1.0 + 2.0 * M_PI));
    const AngleInterval wrapped{1.5 * M_PI, 2.0 * M_PI + M_PI / 6.0};
    CHECK(wrapped.contains(0.1));
    CHECK(wrapped.contains(1.6 * M_PI));
    CHECK_FALSE(wrapped.contains(M_PI));
    CHECK(wrapped.width() == doctest::Approx(2.0 * M_PI / 3.0));
  }

  TEST_CASE("feasible_directions at a rectangle corner") {
    const ConvexPolygon p = rectangle(0.5);
    const Vec2 corner{-M_PI / 2.0, -0.5};

    // r_s = 2l: only the diagonal direction works.
    const auto at_threshold = feasible_directions(p, corner, 1.0);
    REQUIRE_FALSE(at_threshold.empty());
    bool has_diag = false;
    for (const auto& iv : at_threshold) has_diag = has_diag || iv.contains(M_PI / 4.0);
    CHECK(has_diag);
    for (const auto& iv : at_threshold) CHECK(iv.width() < 1e-4);

    // The two edges through the apex constrain directions independently of the
    // radius, and the corner angle equals the aperture: the feasible set stays
    // the singleton pi/4 even for a smaller sector.
    const auto relaxed = feasible_directions(p, corner, 0.5);
    REQUIRE(relaxed.size() == 1);
    CHECK(relaxed[0].contains(M_PI / 4.0));
    CHECK(relaxed[0].width() < 1e-4);

    // Far too large: nothing fits.
    CHECK(feasible_directions(p, corner, 3.0).empty());
  }

  TEST_CASE("feasible_directions at a long-edge midpoint is [pi/4, 3pi/4]") {
    const ConvexPolygon p = rectangle(0.5);
    const auto ivs = feasible_directions(p, {0.0, -0.5}, 1.0);
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == doctest::Approx(M_PI / 4.0).epsilon(2e-3));
    CHECK(ivs[0].hi == doctest::Approx(3.0 * M_PI / 4.0).epsilon(2e-3));
    CHECK(ivs[0].contains(M_PI / 2.0));
  }

  TEST_CASE("feasible_directions rejects off-boundary points and bad radii") {
    const ConvexPolygon p = rectangle(0.5);
    CHECK_THROWS_AS(feasible_directions(p, {0.0, 0.0}, 0.5), NotOnBoundary);
    CHECK_THROWS_AS(feasible_directions(p, {9.0, 9.0}, 0.5), NotOnBoundary);
    CHECK_THROWS_AS(feasible_directions(p, {0.0, -0.5}, 0.0), BadParameter);
    // With a loose geometric tolerance an interior apex is admitted and every
    // direction fits: the full circle comes back as one interval. The square is
    // small enough that its center lies within `geom` of the boundary.
    const Tolerances loose{2.0, 1e-9, 2.0};
    const auto all = feasible_directions(square(1.9), {0.0, 0.0}, 0.1, loose);
    REQUIRE(all.size() == 1);
    CHECK(all[0].width() == doctest::Approx(2.0 * M_PI));
  }

  TEST_CASE("cone_condition on the rectangle family") {
    const ConvexPolygon p = rectangle(0.5);

    ClassSpec ok;
    ok.R = 1.0;
    const ConeReport good = cone_condition(p, ok);
    CHECK(good.satisfied);
    CHECK(good.worst_margin >= -1e-9);
    CHECK(good.sector_radius == doctest::Approx(1.0));

    ClassSpec too_big;
    too_big.R = 1.8;
    const ConeReport bad = cone_condition(p, too_big, {}, true);
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.worst_margin < -0.5);
    CHECK(std::abs(bad.worst_boundary_point.x) == doctest::Approx(M_PI / 2.0));
    CHECK(std::abs(bad.worst_boundary_point.y) == doctest::Approx(0.5));

    ClassSpec thin;
    thin.R = 1.0;
    CHECK_FALSE(cone_condition(rectangle(0.1), thin).satisfied);
  }

  TEST_CASE("cone_condition full report: edge diagnostics do not flip the verdict") {
    const ConvexPolygon p = rectangle(0.5);
    ClassSpec spec;
    spec.R = 1.0;
    const ConeReport rep = cone_condition(p, spec, {}, true);
    CHECK(rep.satisfied);
    CHECK(rep.worst_margin >= -1e-9);
    // Short-edge interior points cannot host the radius-1 sector; the worst
    // diagnostic margin sits near -(1 - sqrt(2)/2) ~ -0.207 at the midpoint.
    CHECK(rep.edge_worst_margin < -0.19);
    CHECK(rep.edge_worst_margin > -0.22);
    CHECK(std::abs(rep.edge_worst_point.x) == doctest::Approx(M_PI / 2.0).epsilon(1e-6));
    CHECK(std::abs(rep.edge_worst_point.y) < 0.26);
    CHECK(rep.samples.size() >= 4 + 4 * 64u);
    REQUIRE(rep.vertex_intervals.size() == 4);
    for (const auto& ivs : rep.vertex_intervals) CHECK_FALSE(ivs.empty());

    // Without the full report the diagnostics stay unset.
    const ConeReport lean = cone_condition(p, spec);
    CHECK(std::isnan(lean.edge_worst_margin));
    CHECK(lean.samples.empty());
    CHECK(lean.vertex_intervals.empty());
  }

  TEST_CASE("class_membership: thresholds, area gate, monotonicity") {
    const ConvexPolygon r5 = rectangle(0.5);
    CHECK(class_membership(r5, 1.0));   // R = 2l exactly
    CHECK(class_membership(r5, 0.25));  // smaller sectors certainly fit
    CHECK_FALSE(class_membership(r5, 1.02));
    CHECK_FALSE(class_membership(r5, 1.8));

    const ConvexPolygon r3 = rectangle(0.3);
    CHECK(class_membership(r3, 0.6));
    CHECK_FALSE(class_membership(r3, 0.9));

    CHECK(class_membership(regular_ngon(64), 1.0));
    CHECK_FALSE(class_membership(regular_ngon(64), 1.99));

    // Monotone in R: membership survives shrinking the radius.
    for (double R : {0.9, 0.6, 0.3, 0.1}) CHECK(class_membership(r5, R));

    // The class is area-normalized: a scaled copy fails on the area gate.
    CHECK_FALSE(class_membership(scale(r5, 2.0), 0.5));
    CHECK_THROWS_AS(class_membership(r5, 0.0), BadParameter);
    CHECK_THROWS_AS(class_membership(r5, -1.0), BadParameter);
  }

  TEST_CASE("triangles always fail the aperture-pi/2 condition") {
    // Interior angles sum to pi, so some vertex angle is at most pi/3 < pi/2:
    // no direction can host the sector at that vertex, whatever R.
    const std::vector<Vec2> tri{{-1.2, -0.7}, {1.4, -0.5}, {0.1, 1.3}};
    const ConvexPolygon t = normalize_area(make_polygon(tri));
    CHECK_FALSE(class_membership(t, 0.05));
    CHECK_FALSE(class_membership(t, 1.0));
  }
}
