#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geo/point.hpp"
#include "geo/quad.hpp"
#include "geo/real.hpp"
#include "geo/relations.hpp"
#include "geo/verdict.hpp"

namespace geo {

// One re-verified postcondition of a construction: the relation (by DSL name,
// plus "left" and the angle relations), its argument points, and the verdict
// obtained by re-checking it from scratch at the construction's fuel.
struct Certificate {
  std::string relation;
  std::vector<Point> args;
  Verdict verdict;
};

// Output points of a construction together with certificates for every
// postcondition.  On exact inputs all certificates hold outright; on
// approximate inputs equational certificates may come back Unknown at the
// given fuel, and it is the caller's policy whether to accept that.
struct ConstructionResult {
  std::vector<Point> points;
  std::vector<Certificate> certificates;
};

// Which of the two apartness alternatives was established, with an index at
// which the corresponding squared distance provably exceeds its lower bound.
struct CotransPointsResult {
  enum class Side { AC, BC };
  Side side = Side::AC;
  WitnessIndex witness{1};
};

// A Steiner-Lehmus configuration: triangle a, b, c with the internal bisector
// foot x (from vertex c, on segment ab) and y (from vertex a, on segment cb).
// Squared lengths are carried exactly when the coordinates allow it.
struct SLInstance {
  Point a, b, c, x, y;
  std::optional<Quad> ay2, cx2, ab2, cb2;
  std::vector<Certificate> certificates;
};

// Given points a # b (witnessed), decide a # c or b # c; total by the
// cotransitivity of the strict order on squared distances.
CotransPointsResult cotrans_points(const Point& a, const Point& b, const Point& c,
                                   const Verdict& w_ab, const Fuel& fuel);

// u strictly left of ab and v strictly left of ba: return the crossing point
// x of line(a,b) with segment uv.  Certificates: col(a,b,x), between(u,x,v).
ConstructionResult plane_separation(const Point& a, const Point& b, const Point& u,
                                    const Point& v, const Verdict& wu, const Verdict& wv,
                                    const Fuel& fuel);

// Lay off the length of bc from a, away from q (q # a witnessed): x on ray
// q->a beyond a with |ax| = |bc|.  Certificates: between(q,a,x),
// cong(a,x,b,c).  A zero-length bc gives x = a.
ConstructionResult extend(const Point& q, const Point& a, const Segment& bc,
                          const Verdict& w_qa, const Fuel& fuel);

// Intersection of ray a->b (at or beyond b) with the circle about c through d,
// given a # b and between(c,b,d) (b inside or on the circle).  Certificates:
// cong(c,u,c,d), between(a,b,u), and apart(b,u) whenever apart(b,d) holds.
ConstructionResult straightedge_compass(const Point& a, const Point& b, const Point& c,
                                        const Point& d, const Verdict& w_ab,
                                        const Verdict& w_cbd, const Fuel& fuel);

// Witnesses that the circle about a through b and the circle about c through d
// properly overlap: p on the first circle strictly inside the second, q on the
// second strictly inside the first, and a # c.
struct CompassWitnesses {
  Verdict ab_cong_ap;
  Verdict cd_gt_cp;
  Verdict cd_cong_cq;
  Verdict ab_gt_aq;
  Verdict a_apart_c;
};

// The circle-circle intersection point on the left of ray a->c.
// Certificates: cong(a,b,a,u), cong(c,d,c,u), left(u,a,c).
ConstructionResult compass_compass(const Point& a, const Point& b, const Point& c,
                                   const Point& d, const Point& p, const Point& q,
                                   const CompassWitnesses& w, const Fuel& fuel);

// Midpoint of a # b.  Certificates: strict_between(a,d,b), cong(a,d,d,b).
ConstructionResult midpoint(const Point& a, const Point& b, const Verdict& w_ab,
                            const Fuel& fuel);

// Outer Pasch: from point_seg_apart(x,b,q), strict_between(b,q,c) and
// strict_between(q,x,a), produce p with strict_between(b,x,p) and
// strict_between(c,p,a).
ConstructionResult outer_pasch(const Point& a, const Point& b, const Point& c,
                               const Point& x, const Point& q, const Verdict& w_xbq,
                               const Verdict& w_bqc, const Verdict& w_qxa, const Fuel& fuel);

// Fourth vertex t = x + y - a of the parallelogram on a, x, y (pairwise
// apart).  Certificates: parallel(y,t,a,x), parallel(x,t,a,y), cong(a,x,y,t),
// cong(x,t,a,y); a collinear triple surfaces its failing certificates rather
// than erroring.
ConstructionResult parallelogram_fourth(const Point& a, const Point& x, const Point& y,
                                        const Verdict& w_ax, const Verdict& w_ay,
                                        const Verdict& w_xy, const Fuel& fuel);

// Foot of the internal angle bisector from `vertex` on segment s1 s2, placed
// by the ratio |s1 f| : |f s2| = |vertex s1| : |vertex s2|.  Certificate:
// angle_cong of the two sub-angles at the vertex.
ConstructionResult bisector_foot(const Point& vertex, const Point& s1, const Point& s2,
                                 const Fuel& fuel);

// Assemble the Steiner-Lehmus configuration for triangle a, b, c (a off line
// bc): both internal bisector feet plus exact squared lengths where
// available.  Certificates: strict_between(a,x,b), strict_between(c,y,b).
SLInstance build_sl_instance(const Point& a, const Point& b, const Point& c, const Fuel& fuel);

// Signs (sign of |cx|^2 - |ay|^2, sign of |cb|^2 - |ab|^2) of an exact
// instance; throws IrrationalInput when the squared lengths are inexact.
std::pair<int, int> sl_signs(const SLInstance& inst);

}  // namespace geo
