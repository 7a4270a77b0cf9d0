#include "geo/angles.hpp"

#include <utility>

#include "exact_detail.hpp"
#include "geo/errors.hpp"

namespace geo {
namespace {

using detail::ExactPts;
using detail::gather_exact;

// Exact data for one angle: d = dot(a-b, c-b), s = |ba|^2 * |bc|^2.
// cos = d / sqrt(s) with s > 0.
struct ExAngle {
  Quad d;
  Quad s;
};

ExAngle exact_angle(const ExactPts& e, std::size_t off) {
  Quad ax = e.x[off] - e.x[off + 1], ay = e.y[off] - e.y[off + 1];
  Quad cx = e.x[off + 2] - e.x[off + 1], cy = e.y[off + 2] - e.y[off + 1];
  Quad la = ax * ax + ay * ay;
  Quad lc = cx * cx + cy * cy;
  if (la.sgn() == 0 || lc.sgn() == 0) {
    throw DegenerateAngle("angle arm collapses onto its vertex");
  }
  return {ax * cx + ay * cy, la * lc};
}

// Sign of d1*sqrt(s2) - d2*sqrt(s1): positive iff cos(angle1) > cos(angle2),
// i.e. iff angle1 < angle2. Sign split first, then squared cross-multiplied
// magnitudes (flipped when both sides are negative).
int cos_order(const ExAngle& a1, const ExAngle& a2) {
  int s1 = a1.d.sgn(), s2 = a2.d.sgn();
  if (s1 != s2) return s1 > s2 ? 1 : -1;
  if (s1 == 0) return 0;
  int sq = Quad::cmp(a1.d * a1.d * a2.s, a2.d * a2.d * a1.s);
  return s1 > 0 ? sq : -sq;
}

struct RealAngle {
  Real d;
  Real s;
};

RealAngle real_angle(const AngleTriple& t) {
  Real ax = real_sub(t.a.x(), t.b.x()), ay = real_sub(t.a.y(), t.b.y());
  Real cx = real_sub(t.c.x(), t.b.x()), cy = real_sub(t.c.y(), t.b.y());
  Real la = real_add(real_mul(ax, ax), real_mul(ay, ay));
  Real lc = real_add(real_mul(cx, cx), real_mul(cy, cy));
  return {real_add(real_mul(ax, cx), real_mul(ay, cy)), real_mul(la, lc)};
}

// The pair (d1*sqrt(s2), d2*sqrt(s1)); their order is the order of the cosines.
std::pair<Real, Real> cos_cross(const RealAngle& a1, const RealAngle& a2) {
  return {real_mul(a1.d, real_sqrt(a2.s)), real_mul(a2.d, real_sqrt(a1.s))};
}

std::optional<WitnessIndex> search_gt(const Real& a, const Real& b, const Fuel& fuel) {
  auto rv = real_gt(a, b, fuel);
  if (rv.holds) return rv.witness;
  return std::nullopt;
}

}  // namespace

Verdict angle_cong(const AngleTriple& t1, const AngleTriple& t2, const Fuel& fuel) {
  const Point pts[6] = {t1.a, t1.b, t1.c, t2.a, t2.b, t2.c};
  if (auto ge = gather_exact(pts)) {
    ExAngle a1 = exact_angle(*ge, 0), a2 = exact_angle(*ge, 3);
    return Verdict::exact(cos_order(a1, a2) == 0);
  }
  auto [lhs, rhs] = cos_cross(real_angle(t1), real_angle(t2));
  if (auto w = search_gt(lhs, rhs, fuel)) return Verdict::fails_at(*w, "refuted:first angle smaller");
  if (auto w = search_gt(rhs, lhs, fuel)) return Verdict::fails_at(*w, "refuted:first angle larger");
  return Verdict::unknown_at_fuel("angle equality needs exact coordinates to hold");
}

Verdict angle_lt(const AngleTriple& t1, const AngleTriple& t2, const Fuel& fuel) {
  const Point pts[6] = {t1.a, t1.b, t1.c, t2.a, t2.b, t2.c};
  if (auto ge = gather_exact(pts)) {
    ExAngle a1 = exact_angle(*ge, 0), a2 = exact_angle(*ge, 3);
    return Verdict::exact(cos_order(a1, a2) > 0);
  }
  auto [lhs, rhs] = cos_cross(real_angle(t1), real_angle(t2));
  if (auto w = search_gt(lhs, rhs, fuel)) return Verdict::holds_at(*w);
  if (auto w = search_gt(rhs, lhs, fuel)) return Verdict::fails_at(*w, "refuted:first angle larger");
  return Verdict::unknown_at_fuel();
}

Verdict angle_sum(const AngleTriple& t1, const AngleTriple& t2, const AngleTriple& t3,
                  const Fuel& fuel) {
  const Point pts[9] = {t1.a, t1.b, t1.c, t2.a, t2.b, t2.c, t3.a, t3.b, t3.c};
  auto ge = gather_exact(pts);
  if (ge) {
    ExAngle a1 = exact_angle(*ge, 0), a2 = exact_angle(*ge, 3), a3 = exact_angle(*ge, 6);
    if (a1.d.is_rational() && a1.s.is_rational() && a2.d.is_rational() && a2.s.is_rational() &&
        a3.d.is_rational() && a3.s.is_rational()) {
      Rational d1 = a1.d.rat(), s1 = a1.s.rat();
      Rational d2 = a2.d.rat(), s2 = a2.s.rat();
      Rational d3 = a3.d.rat(), s3 = a3.s.rat();
      // Sum beyond a straight angle: d1*sqrt(s2) + d2*sqrt(s1) < 0.
      if (Quad::cmp(Quad(Rational(0), d1, s2), Quad(Rational(0), -d2, s1)) < 0) {
        throw SumExceedsStraight("angle sum exceeds a straight angle");
      }
      // A zero summand (cos == 1) makes the relation fail outright.
      auto is_zero_angle = [](const Rational& d, const Rational& s) {
        return d.sgn() > 0 && d * d == s;
      };
      if (is_zero_angle(d1, s1)) return Verdict::exact(false, "exact:first summand is zero");
      if (is_zero_angle(d2, s2)) return Verdict::exact(false, "exact:second summand is zero");
      // cos(sum) = (d1*d2 - sqrt(u)) / sqrt(s1*s2) with u = (s1-d1^2)(s2-d2^2);
      // compare against d3 / sqrt(s3) by clearing the rational denominator.
      Rational u = (s1 - d1 * d1) * (s2 - d2 * d2);
      Rational w = (s1 * s2) / s3;
      int sign = Quad::cmp(Quad(d1 * d2, Rational(-1), u), Quad(Rational(0), d3, w));
      return Verdict::exact(sign == 0);
    }
  }
  RealAngle a1 = real_angle(t1), a2 = real_angle(t2), a3 = real_angle(t3);
  Real overflow = real_add(real_mul(a1.d, real_sqrt(a2.s)), real_mul(a2.d, real_sqrt(a1.s)));
  if (search_gt(Real(), overflow, fuel)) {
    throw SumExceedsStraight("angle sum exceeds a straight angle");
  }
  Real u = real_mul(real_sub(a1.s, real_mul(a1.d, a1.d)), real_sub(a2.s, real_mul(a2.d, a2.d)));
  Real lhs = real_mul(real_sub(real_mul(a1.d, a2.d), real_sqrt(u)), real_sqrt(a3.s));
  Real rhs = real_mul(a3.d, real_sqrt(real_mul(a1.s, a2.s)));
  if (auto w = search_gt(lhs, rhs, fuel)) return Verdict::fails_at(*w, "refuted:sum smaller than target");
  if (auto w = search_gt(rhs, lhs, fuel)) return Verdict::fails_at(*w, "refuted:sum larger than target");
  return Verdict::unknown_at_fuel("angle sums need exact rational data to hold");
}

}  // namespace geo
