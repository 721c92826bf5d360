#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "isoperilab/functionals.hpp"
#include "isoperilab/polygon.hpp"

namespace isoperilab {

/// Corpus-level verification summary. `violations` counts hard-inequality
/// failures beyond tolerance and must be zero on healthy corpora.
struct BoundReport {
  std::size_t corpus_size = 0;
  double max_ratio = 0.0;
  double delta_used = 0.0;
  long violations = 0;
  double h_r = 0.0;
  double min_f_observed = std::numeric_limits<double>::quiet_NaN();
};

/// One corpus body in the CSV export.
struct BodyRow {
  long id = 0;
  double deficit = 0.0;
  double lambda_h = 0.0;
  double fraenkel = 0.0;
  double f = std::numeric_limits<double>::quiet_NaN();  // NaN when ball-flagged
  bool in_class = false;
  double ratio = std::numeric_limits<double>::quiet_NaN();  // lambda_h / sqrt(deficit)
};

/// Diameter cap for class members: 2R(2 - sqrt(2)) + pi / (2(sqrt(2) - 1)R),
/// obtained by inscribing the largest ball (radius (sqrt(2)-1)R) in the
/// aperture-pi/2 sector.
double h_r_bound(double R);

/// Triangle-type bound: lambda_h(p1) <= d_H(p1, p2) + lambda_h(p2) + 1e-8.
/// Both polygons are expected to be normalized to area pi.
bool verify_triangle_bound(const ConvexPolygon& p1, const ConvexPolygon& p2,
                           const Tolerances& tol = {});

/// lambda_h(p) <= diam(p)/r + 1e-9; when R is given and p is a class member,
/// additionally diam(p)/r <= h_r_bound(R) + 1e-9.
bool verify_diam_bound(const ConvexPolygon& p, const Tolerances& tol = {},
                       std::optional<double> R = std::nullopt);

/// Empirical bound constant: max of lambda_h/sqrt(D) over corpus bodies with
/// D < delta. Also counts hard-inequality violations and tracks the smallest
/// shape functional observed. Throws EmptyCohort when no body has D < delta.
BoundReport estimate_bound_constant(const std::vector<ConvexPolygon>& corpus, double delta,
                                    double R = 1.0, const Tolerances& tol = {});

/// |D(sP) - D(P)| <= 1e-9  and  |lambda_h(sP) - lambda_h(P)| <= 1e-6.
bool scale_invariance_check(const ConvexPolygon& p, double s, const Tolerances& tol = {});

/// Deterministic corpus of `count` area-pi bodies cycling through perturbed
/// disks, rectangles, and random hulls, seeded seed_base, seed_base+1, ...
std::vector<ConvexPolygon> mixed_corpus(std::size_t count, std::uint64_t seed_base = 1);

/// Full per-body functional evaluation (deficit, lambda_h, fraenkel, F,
/// membership at R, bound ratio), computed in parallel with per-index writes.
std::vector<BodyRow> evaluate_corpus(const std::vector<ConvexPolygon>& corpus, double R,
                                     const Tolerances& tol = {});

}  // namespace isoperilab
