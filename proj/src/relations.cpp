#include "geo/relations.hpp"

#include <array>

#include "exact_detail.hpp"

namespace geo {

std::size_t relation_arity(RelationKind k) {
  switch (k) {
    case RelationKind::PointApart: return 2;
    case RelationKind::LenApart: return 4;
    case RelationKind::GeLen: return 4;
    case RelationKind::PointSegApart: return 3;
    case RelationKind::Equiv: return 2;
    case RelationKind::Col: return 3;
    case RelationKind::Between: return 3;
    case RelationKind::StrictBetween: return 3;
    case RelationKind::Cong: return 4;
    case RelationKind::Out: return 3;
    case RelationKind::Parallel: return 4;
  }
  throw Error("unknown relation kind");
}

const char* relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::PointApart: return "apart";
    case RelationKind::LenApart: return "len_apart";
    case RelationKind::GeLen: return "ge_len";
    case RelationKind::PointSegApart: return "point_seg_apart";
    case RelationKind::Equiv: return "equiv";
    case RelationKind::Col: return "col";
    case RelationKind::Between: return "between";
    case RelationKind::StrictBetween: return "strict_between";
    case RelationKind::Cong: return "cong";
    case RelationKind::Out: return "out";
    case RelationKind::Parallel: return "parallel";
  }
  throw Error("unknown relation kind");
}

std::optional<RelationKind> relation_from_name(std::string_view s) {
  static constexpr std::array<RelationKind, 11> all = {
      RelationKind::PointApart, RelationKind::LenApart, RelationKind::GeLen,
      RelationKind::PointSegApart, RelationKind::Equiv, RelationKind::Col,
      RelationKind::Between, RelationKind::StrictBetween, RelationKind::Cong,
      RelationKind::Out, RelationKind::Parallel};
  for (RelationKind k : all) {
    if (s == relation_name(k)) return k;
  }
  return std::nullopt;
}

namespace {

using detail::det_real;
using detail::ExactPts;
using detail::gather_exact;
using detail::len2_real;
using detail::q_det;
using detail::q_len2;
using detail::real_zero;

// Formula evaluation over one shared radical.
struct Ex {
  const ExactPts& e;

  bool apart(std::size_t i, std::size_t j) const { return q_len2(e, i, j).sgn() > 0; }
  int len_cmp(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return Quad::cmp(q_len2(e, i, j), q_len2(e, k, l));
  }
  int det_sgn(std::size_t i, std::size_t j, std::size_t k) const { return q_det(e, i, j, k).sgn(); }
  bool between(std::size_t i, std::size_t j, std::size_t k) const {
    // B(ijk): collinear with ik >= ij and ik >= jk.
    return det_sgn(i, j, k) == 0 && len_cmp(i, k, i, j) >= 0 && len_cmp(i, k, j, k) >= 0;
  }
  bool out(std::size_t p, std::size_t a, std::size_t b) const {
    return apart(p, a) && apart(p, b) && (between(p, a, b) || between(p, b, a));
  }
  Quad cross(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    // (j - i) x (l - k)
    return (e.x[j] - e.x[i]) * (e.y[l] - e.y[k]) - (e.y[j] - e.y[i]) * (e.x[l] - e.x[k]);
  }
};

// Straddle pair for a transversal crossing, for Parallel refutation payloads:
// both points sit on line(i0 i1), strictly left of cd and of dc respectively.
std::pair<Point, Point> straddle_points(const Ex& ex) {
  Quad d0 = ex.e.x[1] - ex.e.x[0];
  Quad d1 = ex.e.y[1] - ex.e.y[0];
  Quad base = (ex.e.x[2] - ex.e.x[0]) * (ex.e.y[3] - ex.e.y[0]) -
              (ex.e.y[2] - ex.e.y[0]) * (ex.e.x[3] - ex.e.x[0]);  // det(a, c, d)
  // det(a + t*v, c, d) is affine in t; step = value at t=1 minus value at t=0.
  Quad atv_x = ex.e.x[0] + d0, atv_y = ex.e.y[0] + d1;
  Quad at1 = (ex.e.x[2] - atv_x) * (ex.e.y[3] - atv_y) - (ex.e.y[2] - atv_y) * (ex.e.x[3] - atv_x);
  Quad step = at1 - base;
  Quad t = -(base / step);
  Quad ix = ex.e.x[0] + t * d0, iy = ex.e.y[0] + t * d1;
  Point plus = Point::exact(ix + d0, iy + d1);
  Point minus = Point::exact(ix - d0, iy - d1);
  // det(plus, c, d) = step; positive step puts plus strictly left of cd.
  if (step.sgn() > 0) return {plus, minus};
  return {minus, plus};
}

std::optional<bool> exact_eval(RelationKind k, std::span<const Point> pts, Verdict* out_verdict) {
  auto ge = gather_exact(pts);
  if (!ge) {
    // Pure length comparisons still decide across two different radicals.
    auto two_seg = [&]() -> std::optional<int> {
      auto l1 = detail::exact_len2(pts[0], pts[1]);
      auto l2 = detail::exact_len2(pts[2], pts[3]);
      if (!l1 || !l2) return std::nullopt;
      return Quad::cmp(*l1, *l2);
    };
    switch (k) {
      case RelationKind::LenApart:
        if (auto c = two_seg()) return *c != 0;
        return std::nullopt;
      case RelationKind::GeLen:
        if (auto c = two_seg()) return *c >= 0;
        return std::nullopt;
      case RelationKind::Cong:
        if (auto c = two_seg()) return *c == 0;
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }
  Ex ex{*ge};
  switch (k) {
    case RelationKind::PointApart:
      return ex.apart(0, 1);
    case RelationKind::LenApart:
      return ex.len_cmp(0, 1, 2, 3) != 0;
    case RelationKind::GeLen:
      return ex.len_cmp(0, 1, 2, 3) >= 0;
    case RelationKind::PointSegApart:
      return ex.det_sgn(0, 1, 2) != 0;
    case RelationKind::Equiv:
      return !ex.apart(0, 1);
    case RelationKind::Col:
      return ex.det_sgn(0, 1, 2) == 0;
    case RelationKind::Between:
      return ex.between(0, 1, 2);
    case RelationKind::StrictBetween:
      return ex.between(0, 1, 2) && ex.apart(0, 1) && ex.apart(1, 2);
    case RelationKind::Cong:
      return ex.len_cmp(0, 1, 2, 3) == 0;
    case RelationKind::Out:
      return ex.out(0, 1, 2);
    case RelationKind::Parallel: {
      if (!ex.apart(0, 1) || !ex.apart(2, 3)) return false;
      bool par = ex.cross(0, 1, 2, 3).sgn() == 0;
      if (!par && out_verdict) {
        auto [sx, sy] = straddle_points(ex);
        out_verdict->points = {sx, sy};
      }
      return par;
    }
  }
  throw Error("unknown relation kind");
}

std::optional<WitnessIndex> search_gt(const Real& a, const Real& b, const Fuel& fuel) {
  auto rv = real_gt(a, b, fuel);
  if (rv.holds) return rv.witness;
  return std::nullopt;
}

Verdict positive_from(std::optional<WitnessIndex> w, const char* what) {
  if (w) return Verdict::holds_at(*w);
  return Verdict::unknown_at_fuel(std::string("no witness for ") + what + " within fuel");
}

}  // namespace

Verdict seg_gt(const Segment& ab, const Segment& cd, const Fuel& fuel) {
  auto l1 = detail::exact_len2(ab.a, ab.b);
  auto l2 = detail::exact_len2(cd.a, cd.b);
  if (l1 && l2) return Verdict::exact(Quad::cmp(*l1, *l2) > 0);
  return positive_from(search_gt(len2_real(ab.a, ab.b), len2_real(cd.a, cd.b), fuel),
                       "strict length order");
}

Verdict left(const Point& a, const Segment& bc, const Fuel& fuel) {
  if (auto d = detail::exact_det(a, bc.a, bc.b)) return Verdict::exact(d->sgn() > 0);
  return positive_from(search_gt(det_real(a, bc.a, bc.b), real_zero(), fuel),
                       "positive orientation");
}

Verdict relation(RelationKind k, std::span<const Point> pts, const Fuel& fuel) {
  if (pts.size() != relation_arity(k)) {
    throw ArityMismatch(std::string(relation_name(k)) + " expects " +
                        std::to_string(relation_arity(k)) + " points, got " +
                        std::to_string(pts.size()));
  }
  Verdict v;
  if (auto truth = exact_eval(k, pts, &v)) {
    Verdict res = Verdict::exact(*truth);
    res.points = std::move(v.points);
    return res;
  }

  // General path: positive content is witness-searched, negative content can
  // only be refuted; the remainder is Unknown.
  switch (k) {
    case RelationKind::PointApart:
      return positive_from(search_gt(len2_real(pts[0], pts[1]), real_zero(), fuel), "apartness");
    case RelationKind::LenApart: {
      Real l1 = len2_real(pts[0], pts[1]), l2 = len2_real(pts[2], pts[3]);
      if (auto w = search_gt(l1, l2, fuel)) return Verdict::holds_at(*w, "witness:first longer");
      if (auto w = search_gt(l2, l1, fuel)) return Verdict::holds_at(*w, "witness:second longer");
      return Verdict::unknown_at_fuel();
    }
    case RelationKind::GeLen: {
      Real l1 = len2_real(pts[0], pts[1]), l2 = len2_real(pts[2], pts[3]);
      if (auto w = search_gt(l2, l1, fuel)) return Verdict::fails_at(*w, "refuted:second strictly longer");
      return Verdict::unknown_at_fuel("non-strict order needs exact coordinates to hold");
    }
    case RelationKind::PointSegApart: {
      Real d = det_real(pts[0], pts[1], pts[2]);
      if (auto w = search_gt(d, real_zero(), fuel)) return Verdict::holds_at(*w, "witness:left");
      if (auto w = search_gt(real_zero(), d, fuel)) return Verdict::holds_at(*w, "witness:right");
      return Verdict::unknown_at_fuel();
    }
    case RelationKind::Equiv: {
      if (auto w = search_gt(len2_real(pts[0], pts[1]), real_zero(), fuel)) {
        return Verdict::fails_at(*w, "refuted:apart");
      }
      return Verdict::unknown_at_fuel("equivalence needs exact coordinates to hold");
    }
    case RelationKind::Col: {
      Real d = det_real(pts[0], pts[1], pts[2]);
      if (auto w = search_gt(d, real_zero(), fuel)) return Verdict::fails_at(*w, "refuted:left");
      if (auto w = search_gt(real_zero(), d, fuel)) return Verdict::fails_at(*w, "refuted:right");
      return Verdict::unknown_at_fuel("collinearity needs exact coordinates to hold");
    }
    case RelationKind::Between:
    case RelationKind::StrictBetween: {
      Real d = det_real(pts[0], pts[1], pts[2]);
      if (auto w = search_gt(d, real_zero(), fuel)) return Verdict::fails_at(*w, "refuted:not collinear");
      if (auto w = search_gt(real_zero(), d, fuel)) return Verdict::fails_at(*w, "refuted:not collinear");
      Real lac = len2_real(pts[0], pts[2]);
      if (auto w = search_gt(len2_real(pts[0], pts[1]), lac, fuel)) {
        return Verdict::fails_at(*w, "refuted:first flank exceeds span");
      }
      if (auto w = search_gt(len2_real(pts[1], pts[2]), lac, fuel)) {
        return Verdict::fails_at(*w, "refuted:second flank exceeds span");
      }
      return Verdict::unknown_at_fuel("betweenness needs exact coordinates to hold");
    }
    case RelationKind::Cong: {
      Real l1 = len2_real(pts[0], pts[1]), l2 = len2_real(pts[2], pts[3]);
      if (auto w = search_gt(l1, l2, fuel)) return Verdict::fails_at(*w, "refuted:first longer");
      if (auto w = search_gt(l2, l1, fuel)) return Verdict::fails_at(*w, "refuted:second longer");
      return Verdict::unknown_at_fuel("congruence needs exact coordinates to hold");
    }
    case RelationKind::Out: {
      Real d = det_real(pts[0], pts[1], pts[2]);
      if (auto w = search_gt(d, real_zero(), fuel)) return Verdict::fails_at(*w, "refuted:off the line");
      if (auto w = search_gt(real_zero(), d, fuel)) return Verdict::fails_at(*w, "refuted:off the line");
      return Verdict::unknown_at_fuel();
    }
    case RelationKind::Parallel: {
      // cross(b-a, d-c) != 0 refutes: a transversal line meets both sides.
      Real abx = real_sub(pts[1].x(), pts[0].x());
      Real aby = real_sub(pts[1].y(), pts[0].y());
      Real cdx = real_sub(pts[3].x(), pts[2].x());
      Real cdy = real_sub(pts[3].y(), pts[2].y());
      Real cross = real_sub(real_mul(abx, cdy), real_mul(aby, cdx));
      std::optional<WitnessIndex> w = search_gt(cross, real_zero(), fuel);
      if (!w) w = search_gt(real_zero(), cross, fuel);
      if (w) return Verdict::fails_at(*w, "refuted:transversal directions");
      return Verdict::unknown_at_fuel("parallelism needs exact coordinates to hold");
    }
  }
  throw Error("unknown relation kind");
}

const char* collinear_case_name(CollinearCase c) {
  switch (c) {
    case CollinearCase::Babc: return "Babc";
    case CollinearCase::Bcab: return "Bcab";
    case CollinearCase::Bbca: return "Bbca";
    case CollinearCase::EqAB: return "EqAB";
    case CollinearCase::EqAC: return "EqAC";
    case CollinearCase::EqBC: return "EqBC";
  }
  throw Error("unknown collinear case");
}

CollinearCase collinear_case(const Point& a, const Point& b, const Point& c) {
  const Point pts[3] = {a, b, c};
  auto ge = gather_exact(pts);
  if (!ge) throw IrrationalInput("collinear_case requires exact coordinates");
  Ex ex{*ge};
  if (ex.det_sgn(0, 1, 2) != 0) throw NotCollinear("collinear_case on a non-collinear triple");
  if (ex.between(0, 1, 2)) return CollinearCase::Babc;
  if (ex.between(2, 0, 1)) return CollinearCase::Bcab;
  if (ex.between(1, 2, 0)) return CollinearCase::Bbca;
  if (!ex.apart(0, 1)) return CollinearCase::EqAB;
  if (!ex.apart(0, 2)) return CollinearCase::EqAC;
  if (!ex.apart(1, 2)) return CollinearCase::EqBC;
  throw Error("collinear triple matches no case; classification is not exhaustive");
}

}  // namespace geo
