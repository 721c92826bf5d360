#pragma once

#include <cstdint>
#include <vector>

#include "isoperilab/functionals.hpp"
#include "isoperilab/polygon.hpp"

namespace isoperilab {

/// Simulated-annealing configuration. `sigma` is the move scale as a fraction
/// of sqrt(pi); proposals use standard deviation sigma * sqrt(pi) * T.
struct OptConfig {
  double R = 0.6;
  int n_vertices = 12;
  std::uint64_t seed = 1;
  long iterations = 5000;
  double t0 = 0.5;
  double gamma = 0.999;
  double sigma = 0.05;
  int restarts = 4;
  bool rectangle_only = false;
  Tolerances tol{};
  BallExclusionPolicy ball_policy{};

  void validate() const;
};

/// Best-ever improvement recorded during the merged annealing run.
struct TracePoint {
  long iteration;
  double f;
};

struct OptResult {
  ConvexPolygon best_shape;
  double best_f = 0.0;
  std::vector<TracePoint> trace;
  bool feasible = false;
  /// Closed-form value a(R/2) of the best admissible rectangle, NaN when R/2
  /// falls outside the rectangle family's domain.
  double rectangle_best = 0.0;
};

/// Annealing search over the interior-cone class for low F = D/lambda_h^2.
/// Free mode perturbs a vertex cloud (hull projection + area normalization,
/// rejection on failed membership or ball flag); rectangle_only restricts the
/// state to the one-parameter rectangle family on [R/2, sqrt(pi)/2).
/// Deterministic given the config. Throws NoFeasibleSeed when no restart seed
/// passes class_membership.
OptResult minimize_functional(const OptConfig& config);

struct RectScanRow {
  double l;
  double a;
  double f_pipeline;
  double diff;
};

struct RectScanTable {
  std::vector<RectScanRow> rows;
  bool monotone = true;  // strict increase of `a` along the sorted grid
};

/// Closed form vs pipeline across a grid of rectangle parameters. The grid is
/// sorted ascending; out-of-domain entries raise BadParameter.
RectScanTable rect_scan(std::vector<double> grid, const Tolerances& tol = {});

}  // namespace isoperilab
