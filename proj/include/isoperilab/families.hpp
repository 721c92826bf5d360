#pragma once

#include <cstdint>

#include "isoperilab/polygon.hpp"

namespace isoperilab {

/// Open upper bound of the rectangle family parameter: sqrt(pi)/2.
double rectangle_l_max();

/// Axis-aligned rectangle [-L,L] x [-l,l] with L = pi/(4l), area pi.
/// Throws BadParameter unless 0 < l < sqrt(pi)/2 (the strict 2L > 2l range).
ConvexPolygon rectangle(double l);

/// Closed-form shape functional of the rectangle family:
/// a(l) = [2(pi/(4l) + l) - pi] / [pi * max^2{1 - l, sqrt(pi^2/(16 l^2) + l^2) - 1}].
double a_of_l(double l);

/// Regular n-gon of area pi, centroid at the origin, one vertex on the +x axis.
ConvexPolygon regular_ngon(int n);

/// Hull of m seeded uniform draws from a disk, normalized to area pi,
/// redrawn until class_membership(., R) holds. Deterministic given the seed.
/// Throws GenerationFailed after 10^4 rejections.
ConvexPolygon random_convex_body(std::uint64_t seed, int m, double R, const Tolerances& tol = {});

/// n-gon with radial perturbation rho*(1 + a_i), a_i uniform in
/// [-amplitude, amplitude], re-hulled and normalized to area pi.
ConvexPolygon perturbed_disk(int n, double amplitude, std::uint64_t seed);

/// Hull of m seeded uniform draws from a disk, normalized to area pi, with no
/// class constraint. Deterministic given the seed.
ConvexPolygon random_hull(std::uint64_t seed, int m);

}  // namespace isoperilab
