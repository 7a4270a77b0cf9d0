#include <array>
#include <utility>

#include "geo/errors.hpp"
#include "geo/verifier/verifier.hpp"
#include "rng.hpp"

namespace geo::verifier {
namespace {

using detail::Motion;
using detail::RatPt;
using detail::Rng;
using detail::Turn;
using detail::collinear;
using detail::compose;
using detail::inverse;
using detail::len2;
using detail::perp;
using detail::random_motion;
using detail::random_point;
using detail::random_point_apart;
using detail::random_turn;
using detail::random_upper_turn;
using detail::rotate;

// A point strictly to the left of the directed line p -> q: offsetting by a
// positive multiple of the left normal adds exactly s*|pq|^2 to the
// orientation determinant.
RatPt left_point(Rng& rng, const RatPt& p, const RatPt& q) {
  RatPt v = q - p;
  return p + rng.rat(2, 4) * v + rng.rat_pos(3, 8) * perp(v);
}

// Three points with the first one off the line of the other two.
std::array<RatPt, 3> triangle(Rng& rng) {
  for (;;) {
    RatPt a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (!collinear(a, b, c)) return {a, b, c};
  }
}

Rational half() { return Rational(Int(1), Int(2)); }

std::vector<RatPt> gen(AxiomId ax, Rng& rng) {
  switch (ax) {
    case AxiomId::U1: {
      RatPt a = random_point(rng), b = random_point(rng), c = random_point(rng);
      if (rng.below(4) == 0) c = b;
      if (rng.below(8) == 0) b = a;
      return {a, b, c};
    }
    case AxiomId::U2: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt c = random_point(rng), d = random_point(rng);
      int s = cmp(len2(a, b), len2(c, d));
      if (s < 0) {
        std::swap(a, c);
        std::swap(b, d);
      } else if (s == 0) {
        d = c + half() * (d - c);  // |ab| = |cd| > 0, so halving breaks the tie
      }
      return {a, b, c, d};
    }
    case AxiomId::U3: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt c = random_point(rng);
      int s = cmp(len2(b, a), len2(a, c));
      if (s < 0)
        std::swap(b, c);
      else if (s == 0)
        c = a + half() * (c - a);
      return {a, b, c};
    }
    case AxiomId::U4:
    case AxiomId::U5: {
      std::array<std::pair<RatPt, RatPt>, 3> seg;
      for (auto& sp : seg) sp = {random_point(rng), random_point(rng)};
      auto l = [&](int i) { return len2(seg[i].first, seg[i].second); };
      // Order the three segments by descending squared length.
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (l(i) < l(j)) std::swap(seg[i], seg[j]);
      if (ax == AxiomId::U4) {
        // Need l0 > l1 >= l2.
        if (l(0) == l(1)) {
          if (l(0).sgn() > 0)
            seg[0].second = seg[0].first + Rational(2) * (seg[0].second - seg[0].first);
          else
            seg[0].second = seg[0].first + RatPt{Rational(1), Rational(0)};
        }
      } else {
        // Need l0 >= l1 > l2.
        if (l(1) == l(2)) {
          if (l(1).sgn() > 0) {
            seg[2].second = seg[2].first + half() * (seg[2].second - seg[2].first);
          } else {
            RatPt step{Rational(1), Rational(0)};
            seg[0].second = seg[0].first + step;
            seg[1].second = seg[1].first + step;
          }
        }
      }
      return {seg[0].first, seg[0].second, seg[1].first, seg[1].second,
              seg[2].first, seg[2].second};
    }
    case AxiomId::U6: {
      RatPt a = random_point(rng);
      RatPt c = random_point_apart(rng, a);
      Rational t(Int(rng.range(0, 15)), Int(16));
      return {a, a + t * (c - a), c};
    }
    case AxiomId::U7:
    case AxiomId::U8: {
      RatPt b = random_point(rng);
      RatPt c = random_point_apart(rng, b);
      return {left_point(rng, b, c), b, c};
    }
    case AxiomId::U9: {
      RatPt a = random_point(rng), d = random_point(rng);
      Rational t1(Int(rng.range(0, 16)), Int(16));
      Rational t2(Int(rng.range(0, 16)), Int(16));
      RatPt b = a + t1 * (d - a);
      RatPt c = b + t2 * (d - b);
      return {a, b, c, d};
    }
    case AxiomId::U10: {
      RatPt a = random_point(rng);
      RatPt c = random_point_apart(rng, a);
      Rational t(Int(rng.range(1, 16)), Int(16));
      RatPt b = a + t * (c - a);
      RatPt d = random_point(rng);
      Motion m = random_motion(rng);
      return {a, b, c, d, m.apply(a), m.apply(b), m.apply(c), m.apply(d)};
    }
    case AxiomId::U11: {
      RatPt x = random_point(rng);
      RatPt y = random_point_apart(rng, x);
      RatPt mid = half() * (x + y);
      RatPt p = perp(y - x);
      RatPt a = mid + rng.rat(3, 4) * p;
      RatPt b = mid + rng.rat(3, 4) * p;
      RatPt c = mid + rng.rat(3, 4) * p;
      return {a, b, c, x, y};
    }
    case AxiomId::U12: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt x = left_point(rng, a, b);
      RatPt y = left_point(rng, a, b);
      Rational u(Int(rng.range(0, 16)), Int(16));
      return {a, b, x, y, x + u * (y - x)};
    }
    case AxiomId::U13: {
      auto [a, b, c] = triangle(rng);
      long j;
      do j = rng.range(-8, 16);
      while (j == 8);
      Rational t(Int(j), Int(8));
      return {a, b, c, a + t * (b - a)};
    }
    case AxiomId::C1: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt c = random_point(rng);
      switch (rng.below(5)) {
        case 0: c = a; break;
        case 1: c = b; break;
        default: break;
      }
      return {a, b, c};
    }
    case AxiomId::C2: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      return {a, b, left_point(rng, a, b), left_point(rng, b, a)};
    }
    case AxiomId::C3: {
      RatPt a = random_point(rng);
      return {a, random_point_apart(rng, a)};
    }
    case AxiomId::C4: {
      RatPt c = random_point(rng), d = random_point(rng);
      Rational t(Int(rng.range(0, 16)), Int(16));
      RatPt b = c + t * (d - c);
      return {random_point_apart(rng, b), b, c, d};
    }
    case AxiomId::C5: {
      Turn w = random_turn(rng);
      RatPt wv{w.c, w.s};
      Rational r1 = Rational(1) + rng.rat_pos(4, 8);
      Rational r2 = Rational(1) + rng.rat_pos(4, 8);
      Rational diff = (r1 - r2).abs();
      // Center distance strictly between |r1 - r2| and r1 + r2, so the two
      // circles overlap properly.
      Rational e = diff + (r1 + r2 - diff) * Rational(Int(rng.range(1, 15)), Int(16));
      RatPt a = random_point(rng);
      RatPt c = a + e * wv;
      Turn wb = random_turn(rng);
      Turn wd = random_turn(rng);
      RatPt b = a + r1 * RatPt{wb.c, wb.s};
      RatPt d = c + r2 * RatPt{wd.c, wd.s};
      RatPt p = a + r1 * wv;
      RatPt q = c - r2 * wv;
      return {a, b, c, d, p, q};
    }
    case AxiomId::CollinearCases: {
      RatPt p0 = random_point(rng);
      RatPt v{rng.rat(), rng.rat()};
      while (v.x.sgn() == 0 && v.y.sgn() == 0) v = {rng.rat(), rng.rat()};
      Rational ta = rng.rat(4, 4), tb = rng.rat(4, 4), tc = rng.rat(4, 4);
      switch (rng.below(8)) {
        case 0: tb = ta; break;
        case 1: tc = tb; break;
        case 2: tc = ta; break;
        case 3: tb = ta; tc = ta; break;
        default: break;
      }
      return {p0 + ta * v, p0 + tb * v, p0 + tc * v};
    }
    case AxiomId::ExtendExists: {
      RatPt q = random_point(rng);
      RatPt a = random_point_apart(rng, q);
      RatPt b = random_point(rng);
      RatPt c = rng.below(6) == 0 ? b : random_point(rng);
      return {q, a, b, c};
    }
    case AxiomId::E4: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt c = random_point(rng);
      while ((c.x == a.x && c.y == a.y) || (c.x == b.x && c.y == b.y))
        c = random_point(rng);
      Motion m = random_motion(rng);
      return {a, b, c, m.apply(a), m.apply(b), m.apply(c)};
    }
    case AxiomId::E5: {
      Rational w = rng.rat_pos(3, 4);
      Rational h = rng.rat_nonzero(4, 4);
      RatPt a0{Rational(0), Rational(0)};
      RatPt b0{-w, -h};
      RatPt c0{w, -h};
      Rational s1 = Rational(1) + rng.rat_pos(2, 8);
      Rational s2 = Rational(1) + rng.rat_pos(2, 8);
      RatPt x0 = s1 * b0;
      RatPt y0 = s2 * c0;
      Motion m = random_motion(rng);
      return {m.apply(a0), m.apply(b0), m.apply(c0), m.apply(x0), m.apply(y0)};
    }
    case AxiomId::E6: {
      Rational w = rng.rat_pos(3, 4);
      Rational h = rng.rat_nonzero(4, 4);
      RatPt a0{-w, Rational(0)};
      RatPt b0{w, Rational(0)};
      RatPt c0{Rational(0), h};
      Motion m = random_motion(rng);
      return {m.apply(a0), m.apply(b0), m.apply(c0)};
    }
    case AxiomId::E10: {
      RatPt a = random_point(rng);
      return {a, random_point_apart(rng, a)};
    }
    case AxiomId::E15: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt c = random_point_apart(rng, b);
      RatPt x = b + rng.rat_pos(2, 8) * (b - a);
      RatPt y = b + rng.rat_pos(2, 8) * (b - c);
      return {a, b, c, x, y};
    }
    case AxiomId::E18: {
      auto [a, b, c] = triangle(rng);
      int s = cmp(len2(a, c), len2(a, b));
      if (s < 0)
        std::swap(b, c);
      else if (s == 0)
        c = a + Rational(Int(3), Int(2)) * (c - a);  // keeps b off line ac
      return {a, b, c};
    }
    case AxiomId::E25: {
      for (;;) {
        auto [a, b, c] = triangle(rng);
        Motion m = random_motion(rng);
        RatPt d = m.apply(a), e = m.apply(b), f0 = m.apply(c);
        // Rotate f about d by a shrinking ladder of turns until the base
        // strictly shortens while the vertex stays off the new base line.
        for (long mm : {5L, 10L, 20L, 40L, 80L}) {
          Rational den(Int(mm * mm + 1));
          Turn t{Rational(Int(mm * mm - 1)) / den, Rational(Int(2 * mm)) / den};
          for (int flip = 0; flip < 2; ++flip) {
            Turn tt = flip ? inverse(t) : t;
            RatPt f = d + rotate(tt, f0 - d);
            if (len2(e, f) < len2(b, c) && !collinear(d, e, f))
              return {a, b, c, d, e, f};
          }
        }
      }
    }
    case AxiomId::E27: {
      RatPt x = random_point(rng);
      RatPt y = random_point_apart(rng, x);
      RatPt v = x - y;
      RatPt a = y + rng.rat(2, 4) * v + rng.rat_pos(3, 8) * perp(v);
      RatPt c = (x + y) - a;  // point reflection through the midpoint of xy
      auto off_one = [&rng]() {
        for (;;) {
          Rational u = rng.rat(3, 4);
          if (u != Rational(1)) return u;
        }
      };
      RatPt b = x + off_one() * (a - x);
      RatPt d = y + off_one() * (c - y);
      return {a, b, c, d, x, y};
    }
    case AxiomId::IntersectionUnicity: {
      RatPt P = random_point(rng);
      RatPt v1{rng.rat(), rng.rat()};
      while (v1.x.sgn() == 0 && v1.y.sgn() == 0) v1 = {rng.rat(), rng.rat()};
      RatPt v2{rng.rat(), rng.rat()};
      while ((v1.x * v2.y - v1.y * v2.x).sgn() == 0) v2 = {rng.rat(), rng.rat()};
      Rational t1 = rng.rat(4, 4);
      Rational t2 = rng.rat(4, 4);
      while (t2 == t1) t2 = rng.rat(4, 4);
      Rational s1 = rng.rat(4, 4);
      while (s1.sgn() == 0) s1 = rng.rat(4, 4);
      Rational s2 = rng.rat(4, 4);
      while (s2 == s1) s2 = rng.rat(4, 4);
      return {P + t1 * v1, P + t2 * v1, P + s1 * v2, P + s2 * v2, P, P};
    }
    case AxiomId::LeftConvex: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt x = left_point(rng, a, b);
      RatPt base = rng.coin() ? a : b;
      RatPt y = base + rng.rat_pos(3, 8) * (x - base);
      return {a, b, x, y};
    }
    case AxiomId::LeftOut: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt x = left_point(rng, a, b);
      RatPt c = a + rng.rat_pos(3, 16) * (b - a);
      return {a, b, c, x};
    }
    case AxiomId::StrictBetweenSides: {
      RatPt a = random_point(rng);
      RatPt b = random_point_apart(rng, a);
      RatPt x = left_point(rng, a, b);
      RatPt c = a + rng.rat(3, 4) * (b - a);
      RatPt y = x + (Rational(1) + rng.rat_pos(2, 8)) * (c - x);
      return {a, b, c, x, y};
    }
    case AxiomId::OuterPasch: {
      RatPt b = random_point(rng);
      RatPt c = random_point_apart(rng, b);
      RatPt q = b + rng.unit_open(16) * (c - b);
      RatPt w = b - q;
      RatPt x = q + rng.rat(2, 4) * w + rng.rat_nonzero(3, 8) * perp(w);
      RatPt a = q + (Rational(1) + rng.rat_pos(2, 8)) * (x - q);
      return {a, b, c, x, q};
    }
    case AxiomId::AngleSumLt: {
      Turn P{}, Q{}, R{}, Qp{};
      for (;;) {
        P = random_upper_turn(rng);
        Q = random_upper_turn(rng);
        R = compose(P, Q);
        if (R.s.sgn() <= 0) continue;  // the two angles must sum below straight
        bool found = false;
        for (int tries = 0; tries < 64 && !found; ++tries) {
          Qp = random_upper_turn(rng);
          if (Qp.c > Q.c) found = true;  // strictly smaller second summand
        }
        if (found) break;
      }
      Turn Ap = compose(R, inverse(Qp));
      std::vector<RatPt> pts;
      pts.reserve(18);
      auto emit = [&](const Turn& t) {
        RatPt v = random_point(rng);
        Turn u = random_turn(rng);
        RatPt w{u.c, u.s};
        pts.push_back(v + rng.rat_pos(3, 8) * w);
        pts.push_back(v);
        pts.push_back(v + rng.rat_pos(3, 8) * rotate(t, w));
      };
      emit(P);   // first summand
      emit(Q);   // second summand
      emit(R);   // their sum
      emit(Ap);  // enlarged first summand
      emit(Qp);  // shrunk second summand
      emit(R);   // the common sum again
      return pts;
    }
    case AxiomId::Parallelogram: {
      auto [a, b, c] = triangle(rng);
      RatPt x = a + rng.unit_open(16) * (b - a);
      RatPt y = c + rng.unit_open(16) * (b - c);
      return {a, b, c, x, y};
    }
    case AxiomId::SteinerLehmus: {
      static constexpr long kPyth[][3] = {
          {3, 4, 5},   {4, 3, 5},   {5, 12, 13},  {12, 5, 13},  {8, 15, 17},
          {15, 8, 17}, {20, 21, 29}, {21, 20, 29}, {7, 24, 25},  {24, 7, 25}};
      const long* tr = kPyth[rng.below(10)];
      Rational lam = rng.rat_pos(2, 4);
      Rational w = Rational(Int(tr[0])) * lam;
      Rational h = Rational(Int(tr[1])) * lam;
      RatPt a0{-w, Rational(0)};
      RatPt c0{w, Rational(0)};
      RatPt b0{Rational(0), h};
      // Bisector feet split the opposite sides by the adjacent-side ratio;
      // on this Pythagorean family the split parameter is rational.
      Rational kappa = (Rational(2) * Rational(Int(tr[0]))) /
                       (Rational(2) * Rational(Int(tr[0])) + Rational(Int(tr[2])));
      RatPt x0 = a0 + kappa * (b0 - a0);
      RatPt y0 = c0 + kappa * (b0 - c0);
      Motion m = random_motion(rng);
      return {m.apply(a0), m.apply(b0), m.apply(c0), m.apply(x0), m.apply(y0)};
    }
  }
  throw Error("unhandled axiom in generate_instance");
}

}  // namespace

std::vector<Point> generate_instance(AxiomId axiom, std::uint64_t seed) {
  detail::Rng rng(seed);
  return detail::to_points(gen(axiom, rng));
}

}  // namespace geo::verifier
