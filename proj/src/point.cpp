#include "geo/point.hpp"

namespace geo {

Real quad_to_real(const Quad& v) {
  if (v.is_rational()) return Real::from_rational(v.rat());
  Real root = real_sqrt(Real::from_rational(Rational(v.d())));
  return real_add(Real::from_rational(v.p()), real_mul(Real::from_rational(v.q()), root));
}

Point Point::rational(const Rational& x, const Rational& y) {
  return Point(Real::from_rational(x), Real::from_rational(y), ExactCoords{Quad(x), Quad(y)});
}

Point Point::exact(const Quad& x, const Quad& y) {
  if (!Quad::compatible(x, y)) {
    return Point(quad_to_real(x), quad_to_real(y), std::nullopt);
  }
  return Point(quad_to_real(x), quad_to_real(y), ExactCoords{x, y});
}

Point Point::reals(Real x, Real y) {
  return Point(std::move(x), std::move(y), std::nullopt);
}

}  // namespace geo
