#include "isoperilab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isoperilab/cone.hpp"
#include "isoperilab/families.hpp"
#include "isoperilab/parallel.hpp"
#include "isoperilab/rng.hpp"

namespace isoperilab {

double h_r_bound(double R) {
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");
  const double sqrt2 = std::sqrt(2.0);
  return 2.0 * R * (2.0 - sqrt2) + M_PI / (2.0 * (sqrt2 - 1.0) * R);
}

bool verify_triangle_bound(const ConvexPolygon& p1, const ConvexPolygon& p2,
                           const Tolerances& tol) {
  tol.validate();
  return lambda_h(p1, tol).value <=
         hausdorff_distance(p1, p2) + lambda_h(p2, tol).value + 1e-8;
}

bool verify_diam_bound(const ConvexPolygon& p, const Tolerances& tol, std::optional<double> R) {
  tol.validate();
  const double r = std::sqrt(p.area() / M_PI);
  const double diam_over_r = p.diameter() / r;
  if (lambda_h(p, tol).value > diam_over_r + 1e-9) return false;
  if (R && class_membership(p, *R, tol) && diam_over_r > h_r_bound(*R) + 1e-9) return false;
  return true;
}

BoundReport estimate_bound_constant(const std::vector<ConvexPolygon>& corpus, double delta,
                                    double R, const Tolerances& tol) {
  tol.validate();
  if (!(R > 0.0)) throw BadParameter("class parameter R must be positive");

  struct Metrics {
    double deficit;
    double lambda;
    double diam_over_r;
  };
  std::vector<Metrics> metrics(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const ConvexPolygon& p = corpus[i];
    const double r = std::sqrt(p.area() / M_PI);
    metrics[i] = {deficit(p), lambda_h(p, tol).value, p.diameter() / r};
  });

  BoundReport rep;
  rep.corpus_size = corpus.size();
  rep.delta_used = delta;
  rep.h_r = h_r_bound(R);
  bool any_in_cohort = false;
  const BallExclusionPolicy ball_policy{};
  for (const Metrics& m : metrics) {
    if (m.deficit < -1e-8) ++rep.violations;
    if (m.lambda > m.diam_over_r + 1e-8) ++rep.violations;
    if (m.diam_over_r < 2.0 - 1e-8) ++rep.violations;
    if (m.deficit > 0.0 && m.deficit < delta) {
      any_in_cohort = true;
      rep.max_ratio = std::max(rep.max_ratio, m.lambda / std::sqrt(m.deficit));
    }
    if (m.lambda > ball_policy.eps_ball) {
      const double f = m.deficit / (m.lambda * m.lambda);
      if (std::isnan(rep.min_f_observed) || f < rep.min_f_observed) rep.min_f_observed = f;
    }
  }
  if (!any_in_cohort)
    throw EmptyCohort("no corpus body has deficit below delta = " + std::to_string(delta));
  return rep;
}

bool scale_invariance_check(const ConvexPolygon& p, double s, const Tolerances& tol) {
  tol.validate();
  if (!(s > 0.0)) throw BadParameter("scale factor must be positive");
  const ConvexPolygon q = scale(p, s);
  if (std::abs(deficit(q) - deficit(p)) > 1e-9) return false;
  return std::abs(lambda_h(q, tol).value - lambda_h(p, tol).value) <= 1e-6;
}

std::vector<ConvexPolygon> mixed_corpus(std::size_t count, std::uint64_t seed_base) {
  std::vector<ConvexPolygon> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = seed_base + i;
    switch (i % 3) {
      case 0: {
        Rng rng(seed);
        const int n = 12 + static_cast<int>(seed % 7) * 6;
        corpus.push_back(perturbed_disk(n, rng.uniform(0.0, 0.10), seed));
        break;
      }
      case 1: {
        Rng rng(seed);
        corpus.push_back(rectangle(rng.uniform(0.12, 0.82)));
        break;
      }
      default:
        corpus.push_back(random_hull(seed, 5 + static_cast<int>(seed % 12)));
        break;
    }
  }
  return corpus;
}

std::vector<BodyRow> evaluate_corpus(const std::vector<ConvexPolygon>& corpus, double R,
                                     const Tolerances& tol) {
  tol.validate();
  std::vector<BodyRow> rows(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const ConvexPolygon& p = corpus[i];
    const FunctionalReport rep = shape_functional(p, tol);
    BodyRow row;
    row.id = static_cast<long>(i) + 1;
    row.deficit = rep.deficit;
    row.lambda_h = rep.lambda_h;
    row.fraenkel = rep.fraenkel.value_or(std::numeric_limits<double>::quiet_NaN());
    row.f = rep.f.value_or(std::numeric_limits<double>::quiet_NaN());
    row.in_class = class_membership(p, R, tol);
    row.ratio = rep.deficit > 0.0 ? rep.lambda_h / std::sqrt(rep.deficit)
                                  : std::numeric_limits<double>::quiet_NaN();
    rows[i] = row;
  });
  return rows;
}

}  // namespace isoperilab
