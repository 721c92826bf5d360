#include "isoperilab/predicates.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace isoperilab {
namespace {

// Error-free transformations (Dekker / Knuth). x + y == a op b exactly.
inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bv = a - x;
  const double av = x + bv;
  y = (a - av) - (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// Grows a nonoverlapping expansion by one term; exact.
template <std::size_t N>
std::size_t grow_expansion(std::array<double, N>& e, std::size_t n, double b) {
  double q = b;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum, err;
    two_sum(q, e[i], sum, err);
    if (err != 0.0) e[k++] = err;
    q = sum;
  }
  e[k++] = q;
  return k;
}

// Exact sign of a sum of doubles (at most N terms).
template <std::size_t N>
int exact_sum_sign(const std::array<double, N>& terms, std::size_t n) {
  std::array<double, N> e{};
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) m = grow_expansion(e, m, terms[i]);
  // Nonoverlapping expansion in increasing magnitude order: the largest
  // nonzero component decides. Zeros can trail it when the final two_sum
  // cancels exactly, so scan down past them.
  for (std::size_t i = m; i-- > 0;) {
    if (e[i] > 0.0) return 1;
    if (e[i] < 0.0) return -1;
  }
  return 0;
}

// (3 + 16 eps) eps with eps = 2^-53; Shewchuk's ccwerrboundA.
constexpr double kCcwErrBound = 3.3306690738754716e-16;

}  // namespace

double orient2d(Vec2 a, Vec2 b, Vec2 c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

int orient2d_sign(Vec2 a, Vec2 b, Vec2 c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::fabs(detleft) + std::fabs(detright);
  if (std::fabs(det) > kCcwErrBound * detsum) return det > 0.0 ? 1 : -1;

  // Exact path: the four differences are error-free pairs; multiply them out
  // and sign the 16-term sum exactly.
  double s1, e1, s2, e2, s3, e3, s4, e4;
  two_diff(a.x, c.x, s1, e1);
  two_diff(b.y, c.y, s2, e2);
  two_diff(a.y, c.y, s3, e3);
  two_diff(b.x, c.x, s4, e4);

  std::array<double, 16> terms{};
  std::size_t n = 0;
  auto push_product = [&](double p, double q, double sign) {
    double hi, lo;
    two_product(p, q, hi, lo);
    if (hi != 0.0) terms[n++] = sign * hi;
    if (lo != 0.0) terms[n++] = sign * lo;
  };
  push_product(s1, s2, 1.0);
  push_product(s1, e2, 1.0);
  push_product(e1, s2, 1.0);
  push_product(e1, e2, 1.0);
  push_product(s3, s4, -1.0);
  push_product(s3, e4, -1.0);
  push_product(e3, s4, -1.0);
  push_product(e3, e4, -1.0);
  if (n == 0) return 0;
  return exact_sum_sign(terms, n);
}

}  // namespace isoperilab
