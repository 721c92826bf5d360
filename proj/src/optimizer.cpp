#include "isoperilab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "isoperilab/cone.hpp"
#include "isoperilab/families.hpp"
#include "isoperilab/parallel.hpp"
#include "isoperilab/rng.hpp"

namespace isoperilab {
namespace {

constexpr std::uint64_t kChainSalt = 0x9E3779B97F4A7C15ULL;

struct ChainOutcome {
  bool seeded = false;
  std::vector<TracePoint> improvements;
  std::vector<ConvexPolygon> shapes;  // parallel to improvements
};

/// Reference-quality F for a candidate; matches what OptResult re-validation
/// recomputes. Empty when the shape is ball-flagged.
std::optional<double> reference_f(const ConvexPolygon& p, const OptConfig& cfg) {
  const FunctionalReport rep = shape_functional(p, cfg.tol, cfg.ball_policy, false);
  return rep.f;
}

void record_improvement(ChainOutcome& out, long iteration, const ConvexPolygon& shape, double f) {
  out.improvements.push_back({iteration, f});
  out.shapes.push_back(shape);
}

/// Vertex cloud whose hull is exactly rectangle(l): the four corners plus
/// collinear boundary padding up to n points (the hull drops the padding).
std::vector<Vec2> rectangle_cloud(double l, int n) {
  const double L = M_PI / (4.0 * l);
  std::vector<Vec2> cloud{{-L, -l}, {L, -l}, {L, l}, {-L, l}};
  const int extras = n - 4;
  for (int j = 0; j < extras; ++j) {
    const double t = static_cast<double>(j / 2 + 1) / (extras / 2 + 2);
    const double y = (j % 2 == 0) ? -l : l;
    cloud.push_back({-L + t * 2.0 * L, y});
  }
  return cloud;
}

ChainOutcome run_free_chain(const OptConfig& cfg, int chain) {
  Rng rng(cfg.seed + kChainSalt * static_cast<std::uint64_t>(chain + 1));
  ChainOutcome out;

  std::vector<Vec2> cloud;
  std::optional<ConvexPolygon> seed_shape;
  if (chain == 0 && cfg.n_vertices >= 4 && cfg.R / 2.0 < rectangle_l_max()) {
    cloud = rectangle_cloud(cfg.R / 2.0, cfg.n_vertices);
  } else {
    const ConvexPolygon disk = perturbed_disk(cfg.n_vertices, 0.03, rng.raw());
    cloud.assign(disk.vertices().begin(), disk.vertices().end());
  }
  try {
    const ConvexPolygon shape = normalize_area(make_polygon(cloud));
    if (class_membership(shape, cfg.R, cfg.tol)) seed_shape = shape;
  } catch (const DegenerateInput&) {
  }
  if (!seed_shape) return out;

  const auto seed_f = reference_f(*seed_shape, cfg);
  if (!seed_f) return out;  // ball-flagged seed cannot enter the class search
  out.seeded = true;
  record_improvement(out, 0, *seed_shape, *seed_f);

  double cur_f = *seed_f;
  double chain_best = *seed_f;
  Vec2 center_hint = seed_shape->centroid();
  double t = cfg.t0;
  for (long it = 1; it <= cfg.iterations; ++it, t *= cfg.gamma) {
    const double step = cfg.sigma * std::sqrt(M_PI) * t;
    std::vector<Vec2> proposal(cloud.size());
    for (std::size_t k = 0; k < cloud.size(); ++k)
      proposal[k] = cloud[k] + Vec2{rng.normal(), rng.normal()} * step;

    std::optional<ConvexPolygon> cand;
    try {
      cand = normalize_area(make_polygon(proposal));
    } catch (const DegenerateInput&) {
      continue;
    }
    if (!class_membership(*cand, cfg.R, cfg.tol)) continue;

    const LambdaH lh = lambda_h(*cand, center_hint, cfg.tol);
    if (lh.value <= cfg.ball_policy.eps_ball) continue;
    const double cand_f = deficit(*cand) / (lh.value * lh.value);

    const double delta_f = cand_f - cur_f;
    if (delta_f > 0.0 && rng.uniform() >= std::exp(-delta_f / t)) continue;

    cloud = std::move(proposal);
    cur_f = cand_f;
    center_hint = lh.center;
    if (cand_f < chain_best) {
      const auto exact = reference_f(*cand, cfg);
      if (exact && *exact < chain_best) {
        chain_best = *exact;
        record_improvement(out, it, *cand, *exact);
      }
    }
  }
  return out;
}

ChainOutcome run_rectangle_chain(const OptConfig& cfg, int chain) {
  Rng rng(cfg.seed + kChainSalt * static_cast<std::uint64_t>(chain + 1));
  ChainOutcome out;

  const double l_lo = cfg.R / 2.0;
  const double l_hi = rectangle_l_max() - 1e-9;
  if (!(l_lo < l_hi)) return out;

  double l = (chain == 0) ? 0.5 * (l_lo + l_hi) : rng.uniform(l_lo, l_hi);
  ConvexPolygon shape = rectangle(l);
  if (!class_membership(shape, cfg.R, cfg.tol)) return out;
  const auto seed_f = reference_f(shape, cfg);
  if (!seed_f) return out;
  out.seeded = true;
  record_improvement(out, 0, shape, *seed_f);

  double cur_f = *seed_f;
  double chain_best = *seed_f;
  double t = cfg.t0;
  for (long it = 1; it <= cfg.iterations; ++it, t *= cfg.gamma) {
    const double cand_l =
        std::clamp(l + cfg.sigma * std::sqrt(M_PI) * t * rng.normal(), l_lo, l_hi);
    const ConvexPolygon cand = rectangle(cand_l);
    const auto cand_f = reference_f(cand, cfg);
    if (!cand_f) continue;

    const double delta_f = *cand_f - cur_f;
    if (delta_f > 0.0 && rng.uniform() >= std::exp(-delta_f / t)) continue;

    l = cand_l;
    cur_f = *cand_f;
    if (*cand_f < chain_best) {
      chain_best = *cand_f;
      record_improvement(out, it, cand, *cand_f);
    }
  }
  return out;
}

}  // namespace

void OptConfig::validate() const {
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");
  if (n_vertices < 3) throw BadParameter("n_vertices must be at least 3");
  if (iterations < 1) throw BadParameter("iterations must be at least 1");
  if (!(t0 > 0.0)) throw BadParameter("initial temperature must be positive");
  if (!(gamma > 0.0) || !(gamma < 1.0)) throw BadParameter("gamma must lie in (0, 1)");
  if (!(sigma > 0.0)) throw BadParameter("sigma must be positive");
  if (restarts < 1) throw BadParameter("restarts must be at least 1");
  tol.validate();
}

OptResult minimize_functional(const OptConfig& config) {
  config.validate();

  std::vector<ChainOutcome> chains(static_cast<std::size_t>(config.restarts));
  parallel_for(chains.size(), [&](std::size_t c) {
    chains[c] = config.rectangle_only ? run_rectangle_chain(config, static_cast<int>(c))
                                      : run_free_chain(config, static_cast<int>(c));
  });

  std::optional<ConvexPolygon> best_shape;
  double best_f = std::numeric_limits<double>::infinity();
  std::vector<TracePoint> trace;
  bool any_seeded = false;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const ChainOutcome& chain = chains[c];
    any_seeded = any_seeded || chain.seeded;
    for (std::size_t k = 0; k < chain.improvements.size(); ++k) {
      const TracePoint& tp = chain.improvements[k];
      if (tp.f < best_f) {
        best_f = tp.f;
        best_shape = chain.shapes[k];
        trace.push_back({static_cast<long>(c) * config.iterations + tp.iteration, tp.f});
      }
    }
  }
  if (!any_seeded || !best_shape)
    throw NoFeasibleSeed("no annealing seed passed class membership at R = " +
                         std::to_string(config.R));

  OptResult result{std::move(*best_shape), best_f, std::move(trace), false, 0.0};
  result.feasible = class_membership(result.best_shape, config.R, config.tol);
  result.rectangle_best = (config.R / 2.0 > 0.0 && config.R / 2.0 < rectangle_l_max())
                              ? a_of_l(config.R / 2.0)
                              : std::numeric_limits<double>::quiet_NaN();
  return result;
}

RectScanTable rect_scan(std::vector<double> grid, const Tolerances& tol) {
  tol.validate();
  std::sort(grid.begin(), grid.end());
  RectScanTable table;
  table.rows.reserve(grid.size());
  for (const double l : grid) {
    RectScanRow row;
    row.l = l;
    row.a = a_of_l(l);
    const FunctionalReport rep = shape_functional(rectangle(l), tol, {}, false);
    row.f_pipeline = rep.f.value_or(std::numeric_limits<double>::quiet_NaN());
    row.diff = std::abs(row.f_pipeline - row.a);
    if (!table.rows.empty() && !(row.a > table.rows.back().a)) table.monotone = false;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace isoperilab
