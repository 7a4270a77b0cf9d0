#pragma once

#include <optional>
#include <utility>

#include "geo/quad.hpp"
#include "geo/real.hpp"

namespace geo {

// Exact planar coordinates in one quadratic extension (d == 0 means rational).
struct ExactCoords {
  Quad x, y;
};

// A point of the plane.  Coordinates are always available as reals; when the
// point came from rational data or a single ruler-and-compass step, the exact
// coordinates ride along and unlock exact decisions for negative relations.
class Point {
 public:
  Point() : Point(rational(Rational(0), Rational(0))) {}

  static Point rational(const Rational& x, const Rational& y);
  static Point exact(const Quad& x, const Quad& y);  // drops the hint if radicals clash
  static Point reals(Real x, Real y);

  const Real& x() const { return x_; }
  const Real& y() const { return y_; }
  const std::optional<ExactCoords>& exact_coords() const { return exact_; }
  bool has_exact() const { return exact_.has_value(); }

 private:
  Point(Real x, Real y, std::optional<ExactCoords> e)
      : x_(std::move(x)), y_(std::move(y)), exact_(std::move(e)) {}
  Real x_, y_;
  std::optional<ExactCoords> exact_;
};

struct Segment {
  Point a, b;
};

// Angle (a, b, c) with b the vertex.
struct AngleTriple {
  Point a, b, c;
};

// Real coordinate built from an exact value (lazy; no approximant is computed
// until queried).
Real quad_to_real(const Quad& v);

}  // namespace geo
