#include <string>
#include <vector>

#include "../exact_detail.hpp"
#include "geo/angles.hpp"
#include "geo/constructions.hpp"
#include "geo/errors.hpp"
#include "geo/relations.hpp"
#include "geo/verifier/verifier.hpp"

namespace geo::verifier {
namespace {

using K = RelationKind;

struct Ctx {
  std::span<const Point> p;
  const Fuel& fuel;

  Verdict rel(K k, std::initializer_list<std::size_t> idx) const {
    std::vector<Point> args;
    args.reserve(idx.size());
    for (std::size_t i : idx) args.push_back(p[i]);
    return relation(k, args, fuel);
  }
  Verdict lft(std::size_t x, std::size_t a, std::size_t b) const {
    return left(p[x], Segment{p[a], p[b]}, fuel);
  }
  Verdict sgt(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return seg_gt(Segment{p[a], p[b]}, Segment{p[c], p[d]}, fuel);
  }
  Verdict acong(std::size_t a, std::size_t b, std::size_t c, std::size_t x, std::size_t y,
                std::size_t z) const {
    return angle_cong(AngleTriple{p[a], p[b], p[c]}, AngleTriple{p[x], p[y], p[z]}, fuel);
  }
  Verdict alt(std::size_t a, std::size_t b, std::size_t c, std::size_t x, std::size_t y,
              std::size_t z) const {
    return angle_lt(AngleTriple{p[a], p[b], p[c]}, AngleTriple{p[x], p[y], p[z]}, fuel);
  }
  Verdict asum(std::size_t a1, std::size_t b1, std::size_t c1, std::size_t a2, std::size_t b2,
               std::size_t c2, std::size_t a3, std::size_t b3, std::size_t c3) const {
    return angle_sum(AngleTriple{p[a1], p[b1], p[c1]}, AngleTriple{p[a2], p[b2], p[c2]},
                     AngleTriple{p[a3], p[b3], p[c3]}, fuel);
  }
};

bool all_hold(const std::vector<Verdict>& vs) {
  for (const Verdict& v : vs)
    if (!v.holds()) return false;
  return true;
}

// Conjunction of conclusion parts: first failure wins, then any undecided
// part, then success.
Verdict conj(const std::vector<Verdict>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].fails()) {
      Verdict v = parts[i];
      v.note = "part " + std::to_string(i + 1) + ": " + v.note;
      return v;
    }
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].unknown()) {
      Verdict v = parts[i];
      v.note = "part " + std::to_string(i + 1) + ": " + v.note;
      return v;
    }
  return Verdict::exact(true, "all parts hold");
}

std::vector<Verdict> cert_verdicts(const std::vector<Certificate>& certs) {
  std::vector<Verdict> out;
  out.reserve(certs.size());
  for (const Certificate& c : certs) {
    Verdict v = c.verdict;
    v.note = c.relation + ": " + v.note;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

InstanceReport check_axiom(AxiomId ax, std::span<const Point> pts, const Fuel& fuel) {
  if (pts.size() != axiom_arity(ax))
    throw ArityMismatch(std::string(axiom_name(ax)) + " takes " +
                        std::to_string(axiom_arity(ax)) + " points, got " +
                        std::to_string(pts.size()));
  InstanceReport rep;
  rep.axiom = ax;
  rep.instance.assign(pts.begin(), pts.end());
  Ctx cx{pts, fuel};
  // Hypotheses that cannot even be stated (degenerate angles, irrational
  // mixes, sums past straight) make the instance vacuous; errors after the
  // hypotheses were established count against the conclusion.
  bool in_conclusion = false;
  auto vac = [&rep] { rep.vacuous = true; };
  try {
    switch (ax) {
      case AxiomId::U1: {
        in_conclusion = true;
        rep.conclusion = cx.rel(K::GeLen, {1, 2, 0, 0});
        break;
      }
      case AxiomId::U2: {
        if (!all_hold({cx.sgt(0, 1, 2, 3)})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::GeLen, {0, 1, 2, 3});
        break;
      }
      case AxiomId::U3: {
        if (!all_hold({cx.sgt(1, 0, 0, 2)})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::PointApart, {1, 2});
        break;
      }
      case AxiomId::U4: {
        if (!all_hold({cx.sgt(0, 1, 2, 3), cx.rel(K::GeLen, {2, 3, 4, 5})})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.sgt(0, 1, 4, 5);
        break;
      }
      case AxiomId::U5: {
        if (!all_hold({cx.rel(K::GeLen, {0, 1, 2, 3}), cx.sgt(2, 3, 4, 5)})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.sgt(0, 1, 4, 5);
        break;
      }
      case AxiomId::U6: {
        if (!all_hold({cx.rel(K::Between, {0, 1, 2}), cx.rel(K::PointApart, {1, 2})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.sgt(0, 2, 0, 1);
        break;
      }
      case AxiomId::U7: {
        if (!all_hold({cx.lft(0, 1, 2)})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.lft(1, 2, 0);
        break;
      }
      case AxiomId::U8: {
        if (!all_hold({cx.lft(0, 1, 2)})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::PointApart, {1, 2});
        break;
      }
      case AxiomId::U9: {
        if (!all_hold({cx.rel(K::Between, {0, 1, 3}), cx.rel(K::Between, {1, 2, 3})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Between, {0, 1, 2});
        break;
      }
      case AxiomId::U10: {
        if (!all_hold({cx.rel(K::PointApart, {0, 1}), cx.rel(K::Between, {0, 1, 2}),
                       cx.rel(K::Between, {4, 5, 6}), cx.rel(K::Cong, {0, 1, 4, 5}),
                       cx.rel(K::Cong, {1, 2, 5, 6}), cx.rel(K::Cong, {0, 3, 4, 7}),
                       cx.rel(K::Cong, {1, 3, 5, 7})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Cong, {2, 3, 6, 7});
        break;
      }
      case AxiomId::U11: {
        if (!all_hold({cx.rel(K::Cong, {0, 3, 0, 4}), cx.rel(K::Cong, {1, 3, 1, 4}),
                       cx.rel(K::Cong, {2, 3, 2, 4}), cx.rel(K::PointApart, {3, 4})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Col, {0, 1, 2});
        break;
      }
      case AxiomId::U12: {
        if (!all_hold({cx.lft(2, 0, 1), cx.lft(3, 0, 1), cx.rel(K::Between, {2, 4, 3})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.lft(4, 0, 1);
        break;
      }
      case AxiomId::U13: {
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.rel(K::PointApart, {3, 1}),
                       cx.rel(K::Col, {3, 0, 1})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::PointSegApart, {3, 1, 2});
        break;
      }
      case AxiomId::C1: {
        Verdict w = cx.rel(K::PointApart, {0, 1});
        if (!w.holds()) { vac(); break; }
        in_conclusion = true;
        CotransPointsResult res = cotrans_points(pts[0], pts[1], pts[2], w, fuel);
        bool first = res.side == CotransPointsResult::Side::AC;
        const Point& s = first ? pts[0] : pts[1];
        std::vector<Point> pair{s, pts[2]};
        Verdict chosen = relation(K::PointApart, pair, fuel);
        bool witness_ok = geo::detail::len2_real(s, pts[2]).at(res.witness.n) > 4;
        if (chosen.holds() && witness_ok)
          rep.conclusion = Verdict::holds_at(
              res.witness, first ? "first endpoint apart from probe" : "second endpoint apart from probe");
        else
          rep.conclusion = Verdict::exact(false, "chosen alternative did not re-verify");
        break;
      }
      case AxiomId::C2: {
        Verdict wu = cx.lft(2, 0, 1);
        Verdict wv = cx.lft(3, 1, 0);
        if (!all_hold({wu, wv})) { vac(); break; }
        in_conclusion = true;
        ConstructionResult res = plane_separation(pts[0], pts[1], pts[2], pts[3], wu, wv, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::C3: {
        in_conclusion = true;
        rep.conclusion = cx.rel(K::PointApart, {0, 1});
        break;
      }
      case AxiomId::C4: {
        Verdict w_ab = cx.rel(K::PointApart, {0, 1});
        Verdict w_cbd = cx.rel(K::Between, {2, 1, 3});
        if (!all_hold({w_ab, w_cbd})) { vac(); break; }
        in_conclusion = true;
        ConstructionResult res =
            straightedge_compass(pts[0], pts[1], pts[2], pts[3], w_ab, w_cbd, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::C5: {
        CompassWitnesses w{cx.rel(K::Cong, {0, 1, 0, 4}), cx.sgt(2, 3, 2, 4),
                           cx.rel(K::Cong, {2, 3, 2, 5}), cx.sgt(0, 1, 0, 5),
                           cx.rel(K::PointApart, {0, 2})};
        if (!all_hold({w.ab_cong_ap, w.cd_gt_cp, w.cd_cong_cq, w.ab_gt_aq, w.a_apart_c})) {
          vac();
          break;
        }
        in_conclusion = true;
        ConstructionResult res =
            compass_compass(pts[0], pts[1], pts[2], pts[3], pts[4], pts[5], w, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::CollinearCases: {
        if (!all_hold({cx.rel(K::Col, {0, 1, 2})})) { vac(); break; }
        in_conclusion = true;
        CollinearCase cc = collinear_case(pts[0], pts[1], pts[2]);
        Verdict v;
        switch (cc) {
          case CollinearCase::Babc: v = cx.rel(K::Between, {0, 1, 2}); break;
          case CollinearCase::Bcab: v = cx.rel(K::Between, {2, 0, 1}); break;
          case CollinearCase::Bbca: v = cx.rel(K::Between, {1, 2, 0}); break;
          case CollinearCase::EqAB: v = cx.rel(K::Equiv, {0, 1}); break;
          case CollinearCase::EqAC: v = cx.rel(K::Equiv, {0, 2}); break;
          case CollinearCase::EqBC: v = cx.rel(K::Equiv, {1, 2}); break;
        }
        if (v.holds())
          rep.conclusion = Verdict::exact(true, std::string("case ") + collinear_case_name(cc));
        else
          rep.conclusion =
              Verdict::exact(false, std::string("case ") + collinear_case_name(cc) +
                                        " did not re-verify: " + v.note);
        break;
      }
      case AxiomId::ExtendExists: {
        Verdict w = cx.rel(K::PointApart, {0, 1});
        if (!w.holds()) { vac(); break; }
        in_conclusion = true;
        ConstructionResult res = extend(pts[0], pts[1], Segment{pts[2], pts[3]}, w, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::E4: {
        if (!all_hold({cx.rel(K::PointApart, {0, 1}), cx.rel(K::PointApart, {1, 2}),
                       cx.rel(K::PointApart, {0, 2}), cx.rel(K::PointApart, {3, 4}),
                       cx.rel(K::PointApart, {4, 5}), cx.rel(K::PointApart, {3, 5}),
                       cx.rel(K::Cong, {0, 1, 3, 4}), cx.rel(K::Cong, {1, 2, 4, 5}),
                       cx.acong(0, 1, 2, 3, 4, 5)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = conj({cx.rel(K::Cong, {0, 2, 3, 5}), cx.acong(1, 0, 2, 4, 3, 5),
                               cx.acong(1, 2, 0, 4, 5, 3)});
        break;
      }
      case AxiomId::E5: {
        if (!all_hold({cx.rel(K::Cong, {0, 1, 0, 2}), cx.rel(K::PointSegApart, {0, 1, 2}),
                       cx.rel(K::StrictBetween, {0, 1, 3}),
                       cx.rel(K::StrictBetween, {0, 2, 4})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = conj({cx.acong(0, 1, 2, 0, 2, 1), cx.acong(3, 1, 2, 4, 2, 1)});
        break;
      }
      case AxiomId::E6: {
        if (!all_hold({cx.rel(K::PointSegApart, {2, 0, 1}), cx.acong(2, 0, 1, 2, 1, 0)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Cong, {2, 0, 2, 1});
        break;
      }
      case AxiomId::E10: {
        Verdict w = cx.rel(K::PointApart, {0, 1});
        if (!w.holds()) { vac(); break; }
        in_conclusion = true;
        ConstructionResult res = midpoint(pts[0], pts[1], w, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::E15: {
        if (!all_hold({cx.rel(K::StrictBetween, {0, 1, 3}),
                       cx.rel(K::StrictBetween, {2, 1, 4})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.acong(0, 1, 2, 3, 1, 4);
        break;
      }
      case AxiomId::E18: {
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.sgt(0, 2, 0, 1)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.alt(1, 2, 0, 0, 1, 2);
        break;
      }
      case AxiomId::E25: {
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.rel(K::PointSegApart, {3, 4, 5}),
                       cx.rel(K::Cong, {0, 1, 3, 4}), cx.rel(K::Cong, {0, 2, 3, 5}),
                       cx.sgt(1, 2, 4, 5)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.alt(4, 3, 5, 1, 0, 2);
        break;
      }
      case AxiomId::E27: {
        if (!all_hold({cx.rel(K::Col, {4, 0, 1}), cx.rel(K::Col, {5, 2, 3}),
                       cx.rel(K::PointApart, {0, 1}), cx.rel(K::PointApart, {2, 3}),
                       cx.lft(0, 5, 4), cx.lft(2, 4, 5), cx.acong(0, 4, 5, 2, 5, 4)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Parallel, {0, 1, 2, 3});
        break;
      }
      case AxiomId::IntersectionUnicity: {
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.rel(K::PointApart, {2, 3}),
                       cx.rel(K::Col, {0, 1, 4}), cx.rel(K::Col, {0, 1, 5}),
                       cx.rel(K::Col, {2, 3, 4}), cx.rel(K::Col, {2, 3, 5})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Equiv, {4, 5});
        break;
      }
      case AxiomId::LeftConvex: {
        Verdict lx = cx.lft(2, 0, 1);
        Verdict oa = cx.rel(K::Out, {0, 2, 3});
        Verdict ob = cx.rel(K::Out, {1, 2, 3});
        if (!lx.holds() || !(oa.holds() || ob.holds())) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.lft(3, 0, 1);
        break;
      }
      case AxiomId::LeftOut: {
        if (!all_hold({cx.lft(3, 0, 1), cx.rel(K::Out, {0, 1, 2})})) { vac(); break; }
        in_conclusion = true;
        rep.conclusion = cx.lft(3, 0, 2);
        break;
      }
      case AxiomId::StrictBetweenSides: {
        if (!all_hold({cx.lft(3, 0, 1), cx.rel(K::Col, {0, 1, 2}),
                       cx.rel(K::StrictBetween, {3, 2, 4})})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.lft(4, 1, 0);
        break;
      }
      case AxiomId::OuterPasch: {
        Verdict w1 = cx.rel(K::PointSegApart, {3, 1, 4});
        Verdict w2 = cx.rel(K::StrictBetween, {1, 4, 2});
        Verdict w3 = cx.rel(K::StrictBetween, {4, 3, 0});
        if (!all_hold({w1, w2, w3})) { vac(); break; }
        in_conclusion = true;
        ConstructionResult res = outer_pasch(pts[0], pts[1], pts[2], pts[3], pts[4], w1, w2, w3, fuel);
        rep.conclusion = conj(cert_verdicts(res.certificates));
        break;
      }
      case AxiomId::AngleSumLt: {
        if (!all_hold({cx.asum(0, 1, 2, 3, 4, 5, 6, 7, 8),
                       cx.asum(9, 10, 11, 12, 13, 14, 15, 16, 17),
                       cx.acong(6, 7, 8, 15, 16, 17), cx.rel(K::PointSegApart, {9, 10, 11}),
                       cx.rel(K::PointSegApart, {12, 13, 14}), cx.rel(K::PointSegApart, {3, 4, 5}),
                       cx.rel(K::PointSegApart, {6, 7, 8}), cx.alt(12, 13, 14, 3, 4, 5)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.alt(0, 1, 2, 9, 10, 11);
        break;
      }
      case AxiomId::Parallelogram: {
        Verdict w_ax = cx.rel(K::PointApart, {0, 3});
        Verdict w_ay = cx.rel(K::PointApart, {0, 4});
        Verdict w_xy = cx.rel(K::PointApart, {3, 4});
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.rel(K::StrictBetween, {0, 3, 1}),
                       cx.rel(K::StrictBetween, {2, 4, 1}), w_ax, w_ay, w_xy})) {
          vac();
          break;
        }
        in_conclusion = true;
        ConstructionResult res = parallelogram_fourth(pts[0], pts[3], pts[4], w_ax, w_ay, w_xy, fuel);
        std::vector<Verdict> parts = cert_verdicts(res.certificates);
        std::vector<Point> tbc{res.points[0], pts[1], pts[2]};
        Verdict apart_bc = relation(K::PointSegApart, tbc, fuel);
        apart_bc.note = "fourth vertex off base line: " + apart_bc.note;
        parts.push_back(std::move(apart_bc));
        rep.conclusion = conj(parts);
        break;
      }
      case AxiomId::SteinerLehmus: {
        if (!all_hold({cx.rel(K::PointSegApart, {0, 1, 2}), cx.rel(K::StrictBetween, {0, 3, 1}),
                       cx.rel(K::StrictBetween, {2, 4, 1}), cx.rel(K::Cong, {0, 4, 2, 3}),
                       cx.acong(3, 0, 4, 2, 0, 4), cx.acong(4, 2, 3, 0, 2, 3)})) {
          vac();
          break;
        }
        in_conclusion = true;
        rep.conclusion = cx.rel(K::Cong, {0, 1, 2, 1});
        break;
      }
    }
  } catch (const ArityMismatch&) {
    throw;
  } catch (const Error& e) {
    if (in_conclusion)
      rep.conclusion = Verdict::exact(false, std::string("evaluation error: ") + e.what());
    else
      rep.vacuous = true;
  }
  return rep;
}

}  // namespace geo::verifier
