#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "geo/quad.hpp"
#include "geo/relations.hpp"
#include "oracle.hpp"

using geo::Fuel;
using geo::Int;
using geo::Point;
using geo::Rational;
using geo::RelationKind;
using geo::Segment;
using oracle::Pt;

namespace {

const Fuel kFuel;

Point rp(long x, long y) { return Point::rational(Rational(x), Rational(y)); }

std::mt19937_64 rng(0x5eed5eedu);

mpq_class rand_q(long mag = 8, long den = 5) {
  std::uniform_int_distribution<long> num(-mag, mag), d(1, den);
  mpq_class q(num(rng), d(rng));
  q.canonicalize();  // mpq arithmetic assumes canonical operands
  return q;
}

Pt rand_pt() { return Pt{rand_q(), rand_q()}; }

// Degeneracy-loving tuple generator: random tuples almost never collide, so
// half the time points are rebuilt from shared coordinates, collinear
// placements, translated copies, or reflections.
std::vector<Pt> tuple_for(RelationKind k) {
  const std::size_t n = geo::relation_arity(k);
  std::vector<Pt> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(rand_pt());
  std::uniform_int_distribution<int> pick(0, 7);
  switch (pick(rng)) {
    case 0:  // duplicate an earlier point
      if (n >= 2) p[n - 1] = p[0];
      break;
    case 1: {  // force a collinear triple through p0, p1
      if (n >= 3) {
        const mpq_class t = rand_q(3, 3);
        p[2] = Pt{p[0].x + t * (p[1].x - p[0].x), p[0].y + t * (p[1].y - p[0].y)};
      }
      break;
    }
    case 2:  // translate a segment: equal lengths, parallel directions
      if (n == 4) {
        const mpq_class dx = rand_q(), dy = rand_q();
        p[2] = Pt{p[0].x + dx, p[0].y + dy};
        p[3] = Pt{p[1].x + dx, p[1].y + dy};
      }
      break;
    case 3:  // mirror a segment: equal lengths, usually not parallel
      if (n == 4) {
        p[2] = Pt{-p[0].x, p[0].y};
        p[3] = Pt{-p[1].x, p[1].y};
      }
      break;
    case 4:  // axis-aligned pair
      p[0].y = 0;
      if (n >= 2) p[1].y = 0;
      break;
    default:
      break;
  }
  return p;
}

geo::Verdict rel(RelationKind k, std::initializer_list<Point> pts, const Fuel& fuel = kFuel) {
  const std::vector<Point> v(pts);
  return geo::relation(k, v, fuel);
}

void expect_matches_oracle(RelationKind k, const std::vector<Pt>& p) {
  const bool truth = oracle::relation_truth(k, p);
  const auto pts = oracle::to_points(p);
  const auto v = geo::relation(k, pts, kFuel);
  std::string desc = std::string(geo::relation_name(k));
  for (const auto& pt : p)
    desc += " (" + pt.x.get_str() + "," + pt.y.get_str() + ")";
  INFO("relation ", desc, " truth ", truth, " verdict ",
       std::string(geo::outcome_name(v.outcome)));
  REQUIRE(!v.unknown());
  CHECK(v.holds() == truth);
}

}  // namespace

TEST_CASE("arities and names round-trip") {
  using K = RelationKind;
  const std::pair<K, std::size_t> arities[] = {
      {K::PointApart, 2}, {K::LenApart, 4}, {K::GeLen, 4},  {K::PointSegApart, 3},
      {K::Equiv, 2},      {K::Col, 3},      {K::Between, 3}, {K::StrictBetween, 3},
      {K::Cong, 4},       {K::Out, 3},      {K::Parallel, 4}};
  for (const auto& [k, n] : arities) {
    CHECK(geo::relation_arity(k) == n);
    const auto back = geo::relation_from_name(geo::relation_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!geo::relation_from_name("no_such_relation").has_value());
  const std::vector<Point> two = {rp(0, 0), rp(1, 0)};
  CHECK_THROWS_AS(geo::relation(RelationKind::Col, two, kFuel), geo::ArityMismatch);
}

TEST_CASE("pinned examples") {
  // seg_gt
  CHECK(geo::seg_gt({rp(0, 0), rp(3, 0)}, {rp(0, 0), rp(1, 0)}, kFuel).holds());
  CHECK(geo::seg_gt({rp(0, 0), rp(0, 0)}, {rp(0, 0), rp(0, 0)}, kFuel).fails());
  CHECK(geo::seg_gt({rp(0, 0), rp(1, 0)}, {rp(0, 0), rp(1, 1)}, kFuel).fails());
  // left: determinant sign convention
  CHECK(geo::left(rp(0, 1), {rp(0, 0), rp(1, 0)}, kFuel).holds());
  CHECK(geo::left(rp(0, 0), {rp(0, 0), rp(1, 0)}, kFuel).fails());
  CHECK(geo::left(rp(0, -1), {rp(0, 0), rp(1, 0)}, kFuel).fails());
  // relation examples
  using K = RelationKind;
  std::vector<Point> v = {Point::rational(Rational(1), Rational(2)),
                          Point::rational(Rational(1), Rational(2))};
  CHECK(geo::relation(K::Equiv, v, kFuel).holds());
  v = {rp(0, 0), rp(1, 0), rp(2, 0)};
  CHECK(geo::relation(K::Between, v, kFuel).holds());
  v = {rp(0, 0), rp(1, 0), rp(5, 5), rp(5, 6)};
  CHECK(geo::relation(K::Cong, v, kFuel).holds());
  v = {rp(0, 0), rp(1, 0), rp(0, 1), rp(1, 1)};
  CHECK(geo::relation(K::Parallel, v, kFuel).holds());
  v = {rp(0, 0), rp(1, 0), rp(0, 0), rp(0, 1)};
  CHECK(geo::relation(K::Parallel, v, kFuel).fails());
}

TEST_CASE("verdicts match the brute-force oracle") {
  const RelationKind kinds[] = {
      RelationKind::PointApart, RelationKind::LenApart,       RelationKind::GeLen,
      RelationKind::PointSegApart, RelationKind::Equiv,       RelationKind::Col,
      RelationKind::Between,    RelationKind::StrictBetween,  RelationKind::Cong,
      RelationKind::Out,        RelationKind::Parallel};
  for (RelationKind k : kinds)
    for (int i = 0; i < 300; ++i) expect_matches_oracle(k, tuple_for(k));
}

TEST_CASE("betweenness is its definition") {
  using K = RelationKind;
  for (int i = 0; i < 300; ++i) {
    auto p = tuple_for(K::Between);
    const auto pts = oracle::to_points(p);
    const bool b = geo::relation(K::Between, pts, kFuel).holds();
    const bool col = geo::relation(K::Col, pts, kFuel).holds();
    const std::vector<Point> ge1 = {pts[0], pts[2], pts[0], pts[1]};
    const std::vector<Point> ge2 = {pts[0], pts[2], pts[1], pts[2]};
    const bool g1 = geo::relation(K::GeLen, ge1, kFuel).holds();
    const bool g2 = geo::relation(K::GeLen, ge2, kFuel).holds();
    CHECK(b == (col && g1 && g2));
  }
}

TEST_CASE("parallel is reflexive and symmetric on rational inputs") {
  using K = RelationKind;
  for (int i = 0; i < 200; ++i) {
    const Pt a = rand_pt(), b = rand_pt();
    if (!oracle::point_apart(a, b)) continue;
    const auto ab = oracle::to_points({a, b, a, b});
    CHECK(geo::relation(K::Parallel, ab, kFuel).holds());
    auto p = tuple_for(K::Parallel);
    const auto fwd = oracle::to_points({p[0], p[1], p[2], p[3]});
    const auto rev = oracle::to_points({p[2], p[3], p[0], p[1]});
    CHECK(geo::relation(K::Parallel, fwd, kFuel).holds() ==
          geo::relation(K::Parallel, rev, kFuel).holds());
  }
}

TEST_CASE("exact decisions survive a shared radical") {
  using K = RelationKind;
  const geo::Quad s2 = geo::Quad::sqrt_rational(Rational(2));
  const Point o = rp(0, 0);
  const Point a = Point::exact(s2, geo::Quad(Rational(0)));
  const Point b = Point::exact(geo::Quad(Rational(0)), s2);
  // |oa| = |ob| = sqrt(2): congruence decided exactly, not Unknown
  const std::vector<Point> cong = {o, a, o, b};
  CHECK(geo::relation(K::Cong, cong, kFuel).holds());
  // a and b are apart, and (0,0),(s2,0),(2s2,0) are collinear
  const std::vector<Point> apart = {a, b};
  CHECK(geo::relation(K::PointApart, apart, kFuel).holds());
  const Point c = Point::exact(s2 + s2, geo::Quad(Rational(0)));
  const std::vector<Point> col = {o, a, c};
  CHECK(geo::relation(K::Col, col, kFuel).holds());
  CHECK(rel(K::Between, {o, a, c}).holds());
}

TEST_CASE("negative relations stay unknown without exact coordinates") {
  using K = RelationKind;
  const geo::Real s2 = real_sqrt(geo::Real::from_rational(Rational(2)));
  const Point p = Point::reals(s2, geo::Real::from_rational(Rational(0)));
  const Point q = Point::reals(s2, geo::Real::from_rational(Rational(0)));
  Fuel small = kFuel;
  small.max_index = 1024;
  // the points are equal in value, but no finite probe can confirm it
  CHECK(rel(K::Equiv, {p, q}, small).unknown());
  CHECK(rel(K::PointApart, {p, q}, small).unknown());
  // a genuinely separated pair is confirmed with a witness
  const Point r = rp(3, 3);
  const auto v = rel(K::PointApart, {p, r}, small);
  CHECK(v.holds());
  REQUIRE(v.index.has_value());
  CHECK(v.index->n >= 1);
}

TEST_CASE("collinear case split honors the preference order") {
  using C = geo::CollinearCase;
  CHECK(geo::collinear_case(rp(0, 0), rp(1, 0), rp(2, 0)) == C::Babc);
  CHECK(geo::collinear_case(rp(1, 0), rp(0, 0), rp(2, 0)) == C::Bcab);
  CHECK(geo::collinear_case(rp(0, 0), rp(2, 0), rp(1, 0)) == C::Bbca);
  // coincident pairs satisfy a non-strict betweenness first
  CHECK(geo::collinear_case(rp(1, 1), rp(1, 1), rp(4, 5)) == C::Babc);
  CHECK(geo::collinear_case(rp(1, 1), rp(4, 5), rp(4, 5)) == C::Babc);
  CHECK(geo::collinear_case(rp(1, 1), rp(1, 1), rp(1, 1)) == C::Babc);
  CHECK_THROWS_AS(geo::collinear_case(rp(0, 0), rp(1, 0), rp(1, 1)), geo::NotCollinear);
  const geo::Real z = geo::Real::from_rational(Rational(0));
  const Point noexact = Point::reals(real_sqrt(geo::Real::from_rational(Rational(2))), z);
  CHECK_THROWS_AS(geo::collinear_case(noexact, rp(0, 0), rp(1, 0)), geo::IrrationalInput);

  // whatever case is returned re-verifies as a holding relation
  for (int i = 0; i < 200; ++i) {
    auto p = tuple_for(RelationKind::Col);
    if (!oracle::col(p[0], p[1], p[2])) continue;
    const auto pts = oracle::to_points(p);
    const C c = geo::collinear_case(pts[0], pts[1], pts[2]);
    using K = RelationKind;
    switch (c) {
      case C::Babc: CHECK(geo::relation(K::Between, pts, kFuel).holds()); break;
      case C::Bcab:
        CHECK(rel(K::Between, {pts[2], pts[0], pts[1]}).holds());
        break;
      case C::Bbca:
        CHECK(rel(K::Between, {pts[1], pts[2], pts[0]}).holds());
        break;
      case C::EqAB: CHECK(rel(K::Equiv, {pts[0], pts[1]}).holds()); break;
      case C::EqAC: CHECK(rel(K::Equiv, {pts[0], pts[2]}).holds()); break;
      case C::EqBC: CHECK(rel(K::Equiv, {pts[1], pts[2]}).holds()); break;
    }
  }
}

TEST_CASE("holds witnesses on the real path re-verify") {
  // strip exact hints by rebuilding points from their real coordinates
  for (int i = 0; i < 100; ++i) {
    const Pt a = rand_pt(), b = rand_pt();
    if (!oracle::point_apart(a, b)) continue;
    const Point pa = oracle::to_point(a), pb = oracle::to_point(b);
    const Point ra = Point::reals(pa.x(), pa.y()), rb = Point::reals(pb.x(), pb.y());
    const auto v = rel(RelationKind::PointApart, {ra, rb});
    CHECK(v.holds());  // rational separation is always found at finite fuel
  }
}
