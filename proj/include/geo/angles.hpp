#pragma once

#include "geo/point.hpp"
#include "geo/real.hpp"
#include "geo/verdict.hpp"

namespace geo {

// Angle comparisons. An AngleTriple (a, b, c) denotes the angle at vertex b
// between rays b->a and b->c, measured in [0, pi]. Both arms must be
// nondegenerate: if an arm endpoint provably coincides with the vertex,
// DegenerateAngle is thrown.
//
// With exact coordinates every comparison is decided outright: the cosine of
// the angle is dot(a-b, c-b) / sqrt(|ba|^2 |bc|^2), and cosine is strictly
// decreasing on [0, pi], so comparisons reduce to sign analysis plus squared
// cross-multiplication in the coordinate field. Without exact coordinates,
// equalities can only be refuted and strict orders can only be witnessed.

// angle(t1) == angle(t2).
Verdict angle_cong(const AngleTriple& t1, const AngleTriple& t2, const Fuel& fuel);

// angle(t1) < angle(t2), strictly.
Verdict angle_lt(const AngleTriple& t1, const AngleTriple& t2, const Fuel& fuel);

// angle(t1) + angle(t2) == angle(t3), where both summands must be strictly
// positive (a zero summand makes the relation fail) and the sum must not
// exceed a straight angle (SumExceedsStraight is thrown if it provably does).
Verdict angle_sum(const AngleTriple& t1, const AngleTriple& t2, const AngleTriple& t3,
                  const Fuel& fuel);

}  // namespace geo
