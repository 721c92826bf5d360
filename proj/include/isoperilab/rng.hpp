#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "isoperilab/vec2.hpp"

namespace isoperilab {

/// Seeded RNG with hand-rolled transforms so that streams are reproducible
/// across standard libraries (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform point on the disk of given radius centered at the origin.
  Vec2 disk_point(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    const double a = 2.0 * M_PI * uniform();
    return {r * std::cos(a), r * std::sin(a)};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace isoperilab
