#pragma once

#include "isoperilab/vec2.hpp"

namespace isoperilab {

/// Sign of the signed area of triangle (a, b, c): > 0 for a counter-clockwise
/// turn, < 0 for clockwise, 0 for exactly collinear. A floating-point filter
/// handles the common case; near-degenerate inputs fall through to an exact
/// expansion-arithmetic evaluation, so the sign is always correct.
int orient2d_sign(Vec2 a, Vec2 b, Vec2 c);

/// Filtered approximation of twice the signed area (same sign as
/// orient2d_sign, magnitude only reliable away from zero).
double orient2d(Vec2 a, Vec2 b, Vec2 c);

}  // namespace isoperilab
