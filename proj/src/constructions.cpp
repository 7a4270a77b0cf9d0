#include "geo/constructions.hpp"

#include <initializer_list>

#include "exact_detail.hpp"
#include "geo/angles.hpp"
#include "geo/errors.hpp"

namespace geo {
namespace {

using detail::det_real;
using detail::ExactPts;
using detail::gather_exact;
using detail::len2_real;
using detail::q_det;
using detail::q_len2;

// Re-verify a claimed witness: the verdict must hold and the relation must
// hold again when re-checked from scratch at the same fuel.
void require(const Verdict& w, RelationKind k, std::initializer_list<Point> pts,
             const Fuel& fuel, const char* what) {
  if (!w.holds()) {
    throw InvalidWitness(std::string(what) + ": witness verdict does not hold");
  }
  std::vector<Point> v(pts);
  if (!relation(k, v, fuel).holds()) {
    throw InvalidWitness(std::string(what) + ": witness failed re-verification");
  }
}

void require_seg_gt(const Verdict& w, const Segment& s1, const Segment& s2, const Fuel& fuel,
                    const char* what) {
  if (!w.holds()) {
    throw InvalidWitness(std::string(what) + ": witness verdict does not hold");
  }
  if (!seg_gt(s1, s2, fuel).holds()) {
    throw InvalidWitness(std::string(what) + ": witness failed re-verification");
  }
}

// An index at which v provably exceeds 0 by the decision margin, reusing a
// caller-supplied index when it still checks out.
WitnessIndex positivity_index(const Real& v, const std::optional<WitnessIndex>& idx,
                              const Fuel& fuel, const char* what) {
  if (idx && idx->n > 0 && v.at(idx->n) > 4) return *idx;
  RealVerdict rv = real_gt(v, Real(), fuel);
  if (rv.holds) return *rv.witness;
  throw InvalidWitness(std::string(what) + ": positivity not established within fuel");
}

Certificate make_cert(const char* rel, std::vector<Point> args, const Fuel& fuel) {
  Verdict v;
  std::string name(rel);
  if (name == "left") {
    v = left(args[0], Segment{args[1], args[2]}, fuel);
  } else if (name == "angle_cong") {
    v = angle_cong(AngleTriple{args[0], args[1], args[2]}, AngleTriple{args[3], args[4], args[5]},
                   fuel);
  } else {
    auto k = relation_from_name(name);
    if (!k) throw Error("unknown certificate relation: " + name);
    v = relation(*k, args, fuel);
  }
  return Certificate{std::move(name), std::move(args), std::move(v)};
}

Real scale_real(const Rational& r, const Real& v) { return real_mul(Real::from_rational(r), v); }

}  // namespace

CotransPointsResult cotrans_points(const Point& a, const Point& b, const Point& c,
                                   const Verdict& w_ab, const Fuel& fuel) {
  if (!w_ab.holds()) throw InvalidWitness("cotrans: apartness witness does not hold");
  Real lab = len2_real(a, b);
  WitnessIndex n0 = positivity_index(lab, w_ab.index, fuel, "cotrans: a # b");
  Real lac = len2_real(a, c), lbc = len2_real(b, c);
  // |ab|^2 <= 2(|ac|^2 + |cb|^2), so the combined gap clears the decision
  // margin within a few doublings of the apartness index.
  Int n = n0.n;
  Int cap = n0.n * 64;
  while (lac.at(n) + lbc.at(n) <= 4) {
    if (n >= cap) throw Error("cotrans: combined positivity index not found");
    n *= 2;
  }
  CotransSplit split = real_cotrans(lac, real_neg(lbc), Real(), WitnessIndex{n});
  if (split.side == CotransSplit::Side::AGtZ) {
    return CotransPointsResult{CotransPointsResult::Side::AC, split.witness};
  }
  return CotransPointsResult{CotransPointsResult::Side::BC, split.witness};
}

ConstructionResult plane_separation(const Point& a, const Point& b, const Point& u,
                                    const Point& v, const Verdict& wu, const Verdict& wv,
                                    const Fuel& fuel) {
  if (!wu.holds() || !wv.holds()) {
    throw InvalidWitness("plane separation: side witness verdict does not hold");
  }
  if (!left(u, Segment{a, b}, fuel).holds() || !left(v, Segment{b, a}, fuel).holds()) {
    throw InvalidWitness("plane separation: side witness failed re-verification");
  }
  Point x;
  bool exact_done = false;
  const Point pts[4] = {a, b, u, v};
  if (auto ge = gather_exact(pts)) {
    // u and v sit strictly on opposite sides of line(a,b), so the signed
    // areas alpha > 0 > beta and the segment parameter s lies in (0,1).
    Quad alpha = q_det(*ge, 2, 0, 1);
    Quad beta = q_det(*ge, 3, 0, 1);
    Quad s = alpha / (alpha - beta);
    x = Point::exact(ge->x[2] + s * (ge->x[3] - ge->x[2]), ge->y[2] + s * (ge->y[3] - ge->y[2]));
    exact_done = true;
  }
  if (!exact_done) {
    Real alpha = det_real(u, a, b);
    Real beta = det_real(v, a, b);
    Real denom = real_sub(alpha, beta);
    WitnessIndex nd = positivity_index(denom, std::nullopt, fuel, "plane separation: crossing");
    Real s = real_mul(alpha, real_recip_pos(denom, nd));
    x = Point::reals(real_add(u.x(), real_mul(s, real_sub(v.x(), u.x()))),
                     real_add(u.y(), real_mul(s, real_sub(v.y(), u.y()))));
  }
  ConstructionResult r;
  r.points = {x};
  r.certificates.push_back(make_cert("col", {a, b, x}, fuel));
  r.certificates.push_back(make_cert("between", {u, x, v}, fuel));
  return r;
}

ConstructionResult extend(const Point& q, const Point& a, const Segment& bc,
                          const Verdict& w_qa, const Fuel& fuel) {
  require(w_qa, RelationKind::PointApart, {q, a}, fuel, "extend: q # a");
  Point x;
  bool exact_done = false;
  const Point pts[4] = {q, a, bc.a, bc.b};
  if (auto ge = gather_exact(pts)) {
    try {
      Quad lqa = q_len2(*ge, 0, 1);
      Quad lbc = q_len2(*ge, 2, 3);
      if (auto rho = quad_sqrt(lbc / lqa)) {
        x = Point::exact(ge->x[1] + *rho * (ge->x[1] - ge->x[0]),
                         ge->y[1] + *rho * (ge->y[1] - ge->y[0]));
        exact_done = true;
      }
    } catch (const IrrationalInput&) {
      // Scale factor lives outside the coordinate field; fall through.
    }
  }
  if (!exact_done) {
    Real lqa = len2_real(q, a);
    WitnessIndex n0 = positivity_index(lqa, w_qa.index, fuel, "extend: q # a");
    Real rho = real_sqrt(real_mul(len2_real(bc.a, bc.b), real_recip_pos(lqa, n0)));
    x = Point::reals(real_add(a.x(), real_mul(rho, real_sub(a.x(), q.x()))),
                     real_add(a.y(), real_mul(rho, real_sub(a.y(), q.y()))));
  }
  ConstructionResult r;
  r.points = {x};
  r.certificates.push_back(make_cert("between", {q, a, x}, fuel));
  r.certificates.push_back(make_cert("cong", {a, x, bc.a, bc.b}, fuel));
  return r;
}

ConstructionResult straightedge_compass(const Point& a, const Point& b, const Point& c,
                                        const Point& d, const Verdict& w_ab,
                                        const Verdict& w_cbd, const Fuel& fuel) {
  require(w_ab, RelationKind::PointApart, {a, b}, fuel, "ray-circle: a # b");
  require(w_cbd, RelationKind::Between, {c, b, d}, fuel, "ray-circle: between(c,b,d)");
  // Points a + s(b-a) at squared distance |cd|^2 from c satisfy
  // A s^2 + B s + C = 0; between(c,b,d) puts b inside the circle, so the
  // larger root has s >= 1 (at or beyond b).
  Point u;
  bool exact_done = false;
  const Point pts[4] = {a, b, c, d};
  if (auto ge = gather_exact(pts)) {
    try {
      Quad A = q_len2(*ge, 0, 1);
      Quad B = Quad(2) * ((ge->x[1] - ge->x[0]) * (ge->x[0] - ge->x[2]) +
                          (ge->y[1] - ge->y[0]) * (ge->y[0] - ge->y[2]));
      Quad C = q_len2(*ge, 0, 2) - q_len2(*ge, 2, 3);
      Quad disc = B * B - Quad(4) * A * C;
      if (auto root = quad_sqrt(disc)) {
        Quad s = (*root - B) / (Quad(2) * A);
        u = Point::exact(ge->x[0] + s * (ge->x[1] - ge->x[0]),
                         ge->y[0] + s * (ge->y[1] - ge->y[0]));
        exact_done = true;
      }
    } catch (const IrrationalInput&) {
    }
  }
  if (!exact_done) {
    Real A = len2_real(a, b);
    Real bax = real_sub(b.x(), a.x()), bay = real_sub(b.y(), a.y());
    Real acx = real_sub(a.x(), c.x()), acy = real_sub(a.y(), c.y());
    Real B = scale_real(Rational(2), real_add(real_mul(bax, acx), real_mul(bay, acy)));
    Real C = real_sub(len2_real(a, c), len2_real(c, d));
    Real disc = real_sub(real_mul(B, B), scale_real(Rational(4), real_mul(A, C)));
    Real root = real_sqrt(disc);
    Real two_a = scale_real(Rational(2), A);
    WitnessIndex nd = positivity_index(two_a, std::nullopt, fuel, "ray-circle: a # b");
    Real s = real_mul(real_sub(root, B), real_recip_pos(two_a, nd));
    u = Point::reals(real_add(a.x(), real_mul(s, bax)), real_add(a.y(), real_mul(s, bay)));
  }
  ConstructionResult r;
  r.points = {u};
  r.certificates.push_back(make_cert("cong", {c, u, c, d}, fuel));
  r.certificates.push_back(make_cert("between", {a, b, u}, fuel));
  if (relation(RelationKind::PointApart, std::vector<Point>{b, d}, fuel).holds()) {
    r.certificates.push_back(make_cert("apart", {b, u}, fuel));
  }
  return r;
}

ConstructionResult compass_compass(const Point& a, const Point& b, const Point& c,
                                   const Point& d, const Point& p, const Point& q,
                                   const CompassWitnesses& w, const Fuel& fuel) {
  require(w.ab_cong_ap, RelationKind::Cong, {a, b, a, p}, fuel, "circle-circle: |ab| = |ap|");
  require_seg_gt(w.cd_gt_cp, Segment{c, d}, Segment{c, p}, fuel, "circle-circle: |cd| > |cp|");
  require(w.cd_cong_cq, RelationKind::Cong, {c, d, c, q}, fuel, "circle-circle: |cd| = |cq|");
  require_seg_gt(w.ab_gt_aq, Segment{a, b}, Segment{a, q}, fuel, "circle-circle: |ab| > |aq|");
  require(w.a_apart_c, RelationKind::PointApart, {a, c}, fuel, "circle-circle: a # c");
  // Foot parameter t along a->c and height fraction sqrt(k) with
  // k = (r1^2 - t^2 e) / e; the +90-degree offset lands on the left of
  // ray a->c (positive determinant).
  Point u;
  bool exact_done = false;
  const Point pts[4] = {a, b, c, d};
  if (auto ge = gather_exact(pts)) {
    try {
      Quad e = q_len2(*ge, 0, 2);
      Quad r1 = q_len2(*ge, 0, 1);
      Quad r2 = q_len2(*ge, 2, 3);
      Quad t = (r1 - r2 + e) / (Quad(2) * e);
      Quad k = (r1 - t * t * e) / e;
      if (auto root = quad_sqrt(k)) {
        Quad dx = ge->x[2] - ge->x[0], dy = ge->y[2] - ge->y[0];
        u = Point::exact(ge->x[0] + t * dx - *root * dy, ge->y[0] + t * dy + *root * dx);
        exact_done = true;
      }
    } catch (const IrrationalInput&) {
    }
  }
  if (!exact_done) {
    Real e = len2_real(a, c);
    WitnessIndex ne = positivity_index(e, w.a_apart_c.index, fuel, "circle-circle: a # c");
    Real re = real_recip_pos(e, ne);
    Real r1 = len2_real(a, b), r2 = len2_real(c, d);
    Real t = scale_real(Rational(1, 2), real_mul(real_add(real_sub(r1, r2), e), re));
    Real k = real_mul(real_sub(r1, real_mul(real_mul(t, t), e)), re);
    Real root = real_sqrt(k);
    Real dx = real_sub(c.x(), a.x()), dy = real_sub(c.y(), a.y());
    u = Point::reals(real_sub(real_add(a.x(), real_mul(t, dx)), real_mul(root, dy)),
                     real_add(real_add(a.y(), real_mul(t, dy)), real_mul(root, dx)));
  }
  ConstructionResult r;
  r.points = {u};
  r.certificates.push_back(make_cert("cong", {a, b, a, u}, fuel));
  r.certificates.push_back(make_cert("cong", {c, d, c, u}, fuel));
  r.certificates.push_back(make_cert("left", {u, a, c}, fuel));
  return r;
}

ConstructionResult midpoint(const Point& a, const Point& b, const Verdict& w_ab,
                            const Fuel& fuel) {
  require(w_ab, RelationKind::PointApart, {a, b}, fuel, "midpoint: a # b");
  Point d;
  const Point pts[2] = {a, b};
  if (auto ge = gather_exact(pts)) {
    Quad half(Rational(1, 2));
    d = Point::exact(half * (ge->x[0] + ge->x[1]), half * (ge->y[0] + ge->y[1]));
  } else {
    d = Point::reals(scale_real(Rational(1, 2), real_add(a.x(), b.x())),
                     scale_real(Rational(1, 2), real_add(a.y(), b.y())));
  }
  ConstructionResult r;
  r.points = {d};
  r.certificates.push_back(make_cert("strict_between", {a, d, b}, fuel));
  r.certificates.push_back(make_cert("cong", {a, d, d, b}, fuel));
  return r;
}

ConstructionResult outer_pasch(const Point& a, const Point& b, const Point& c,
                               const Point& x, const Point& q, const Verdict& w_xbq,
                               const Verdict& w_bqc, const Verdict& w_qxa, const Fuel& fuel) {
  require(w_xbq, RelationKind::PointSegApart, {x, b, q}, fuel, "outer pasch: x off line bq");
  require(w_bqc, RelationKind::StrictBetween, {b, q, c}, fuel, "outer pasch: between(b,q,c)");
  require(w_qxa, RelationKind::StrictBetween, {q, x, a}, fuel, "outer pasch: between(q,x,a)");
  // p = line(b,x) meets segment(c,a); parameterize p = c + s(a-c) and solve
  // det(p,b,x) = 0, which is affine in s.
  Point p;
  bool exact_done = false;
  const Point pts[4] = {a, b, c, x};
  if (auto ge = gather_exact(pts)) {
    Quad base = q_det(*ge, 2, 1, 3);
    Quad step = q_det(*ge, 0, 1, 3) - base;
    if (step.sgn() == 0) throw Error("outer pasch: degenerate transversal");
    Quad s = -(base / step);
    p = Point::exact(ge->x[2] + s * (ge->x[0] - ge->x[2]), ge->y[2] + s * (ge->y[0] - ge->y[2]));
    exact_done = true;
  }
  if (!exact_done) {
    Real base = det_real(c, b, x);
    Real step = real_sub(det_real(a, b, x), base);
    Real s;
    RealVerdict pos = real_gt(step, Real(), fuel);
    if (pos.holds) {
      s = real_neg(real_mul(base, real_recip_pos(step, *pos.witness)));
    } else {
      RealVerdict neg = real_gt(Real(), step, fuel);
      if (!neg.holds) throw Error("outer pasch: transversal not established within fuel");
      s = real_mul(base, real_recip_pos(real_neg(step), *neg.witness));
    }
    p = Point::reals(real_add(c.x(), real_mul(s, real_sub(a.x(), c.x()))),
                     real_add(c.y(), real_mul(s, real_sub(a.y(), c.y()))));
  }
  ConstructionResult r;
  r.points = {p};
  r.certificates.push_back(make_cert("strict_between", {b, x, p}, fuel));
  r.certificates.push_back(make_cert("strict_between", {c, p, a}, fuel));
  return r;
}

ConstructionResult parallelogram_fourth(const Point& a, const Point& x, const Point& y,
                                        const Verdict& w_ax, const Verdict& w_ay,
                                        const Verdict& w_xy, const Fuel& fuel) {
  require(w_ax, RelationKind::PointApart, {a, x}, fuel, "parallelogram: a # x");
  require(w_ay, RelationKind::PointApart, {a, y}, fuel, "parallelogram: a # y");
  require(w_xy, RelationKind::PointApart, {x, y}, fuel, "parallelogram: x # y");
  Point t;
  const Point pts[3] = {a, x, y};
  if (auto ge = gather_exact(pts)) {
    t = Point::exact(ge->x[1] + ge->x[2] - ge->x[0], ge->y[1] + ge->y[2] - ge->y[0]);
  } else {
    t = Point::reals(real_sub(real_add(x.x(), y.x()), a.x()),
                     real_sub(real_add(x.y(), y.y()), a.y()));
  }
  ConstructionResult r;
  r.points = {t};
  r.certificates.push_back(make_cert("parallel", {y, t, a, x}, fuel));
  r.certificates.push_back(make_cert("parallel", {x, t, a, y}, fuel));
  r.certificates.push_back(make_cert("cong", {a, x, y, t}, fuel));
  r.certificates.push_back(make_cert("cong", {x, t, a, y}, fuel));
  return r;
}

ConstructionResult bisector_foot(const Point& vertex, const Point& s1, const Point& s2,
                                 const Fuel& fuel) {
  // Ratio form of the internal bisector: f = s1 + (s2 - s1) / (1 + sqrt(g))
  // with g = |vertex s2|^2 / |vertex s1|^2.
  Point f;
  bool exact_done = false;
  const Point pts[3] = {vertex, s1, s2};
  if (auto ge = gather_exact(pts)) {
    Quad t1 = q_len2(*ge, 0, 1);
    Quad t2 = q_len2(*ge, 0, 2);
    Quad l12 = q_len2(*ge, 1, 2);
    if (t1.sgn() == 0 || t2.sgn() == 0 || l12.sgn() == 0) {
      throw DegenerateTriangle("bisector foot needs three pairwise apart points");
    }
    try {
      if (auto root = quad_sqrt(t2 / t1)) {
        Quad kappa = Quad(1) / (Quad(1) + *root);
        f = Point::exact(ge->x[1] + kappa * (ge->x[2] - ge->x[1]),
                         ge->y[1] + kappa * (ge->y[2] - ge->y[1]));
        exact_done = true;
      }
    } catch (const IrrationalInput&) {
    }
  } else {
    auto apart_or_throw = [&](const Point& u, const Point& v, const char* what) {
      if (!real_gt(len2_real(u, v), Real(), fuel).holds) {
        throw DegenerateTriangle(std::string("bisector foot: ") + what +
                                 " not provably apart within fuel");
      }
    };
    apart_or_throw(vertex, s1, "vertex and first endpoint");
    apart_or_throw(vertex, s2, "vertex and second endpoint");
    apart_or_throw(s1, s2, "segment endpoints");
  }
  if (!exact_done) {
    Real t1 = len2_real(vertex, s1);
    WitnessIndex n1 = positivity_index(t1, std::nullopt, fuel, "bisector foot: first side");
    Real g = real_mul(len2_real(vertex, s2), real_recip_pos(t1, n1));
    Real denom = real_add(Real::from_rational(Rational(1)), real_sqrt(g));
    WitnessIndex nd = positivity_index(denom, std::nullopt, fuel, "bisector foot: ratio");
    Real kappa = real_recip_pos(denom, nd);
    f = Point::reals(real_add(s1.x(), real_mul(kappa, real_sub(s2.x(), s1.x()))),
                     real_add(s1.y(), real_mul(kappa, real_sub(s2.y(), s1.y()))));
  }
  ConstructionResult r;
  r.points = {f};
  r.certificates.push_back(make_cert("angle_cong", {s1, vertex, f, f, vertex, s2}, fuel));
  return r;
}

SLInstance build_sl_instance(const Point& a, const Point& b, const Point& c, const Fuel& fuel) {
  if (!relation(RelationKind::PointSegApart, std::vector<Point>{a, b, c}, fuel).holds()) {
    throw DegenerateTriangle("triangle vertex not provably off the opposite line");
  }
  SLInstance inst;
  inst.a = a;
  inst.b = b;
  inst.c = c;
  inst.x = bisector_foot(c, a, b, fuel).points[0];
  inst.y = bisector_foot(a, c, b, fuel).points[0];
  inst.ay2 = detail::exact_len2(a, inst.y);
  inst.cx2 = detail::exact_len2(c, inst.x);
  inst.ab2 = detail::exact_len2(a, b);
  inst.cb2 = detail::exact_len2(c, b);
  inst.certificates.push_back(make_cert("strict_between", {a, inst.x, b}, fuel));
  inst.certificates.push_back(make_cert("strict_between", {c, inst.y, b}, fuel));
  return inst;
}

std::pair<int, int> sl_signs(const SLInstance& inst) {
  if (!inst.ay2 || !inst.cx2 || !inst.ab2 || !inst.cb2) {
    throw IrrationalInput("instance does not carry exact squared lengths");
  }
  return {Quad::cmp(*inst.cx2, *inst.ay2), Quad::cmp(*inst.cb2, *inst.ab2)};
}

}  // namespace geo
