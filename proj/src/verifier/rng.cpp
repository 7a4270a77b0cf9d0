#include "rng.hpp"

#include "geo/errors.hpp"

namespace geo::verifier::detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below requires a positive bound");
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw Error("Rng::range requires lo <= hi");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::coin() { return (next() & 1u) != 0; }

Rational Rng::rat(long mag, long den_mag) {
  long num = range(-mag, mag);
  long den = range(1, den_mag);
  return Rational(Int(num), Int(den));
}

Rational Rng::rat_nonzero(long mag, long den_mag) {
  for (;;) {
    Rational r = rat(mag, den_mag);
    if (r.sgn() != 0) return r;
  }
}

Rational Rng::rat_pos(long span, long den) {
  long k = range(1, span * den);
  return Rational(Int(k), Int(den));
}

Rational Rng::unit_open(long den) {
  long k = range(1, den - 1);
  return Rational(Int(k), Int(den));
}

RatPt operator+(const RatPt& a, const RatPt& b) { return {a.x + b.x, a.y + b.y}; }
RatPt operator-(const RatPt& a, const RatPt& b) { return {a.x - b.x, a.y - b.y}; }
RatPt operator*(const Rational& s, const RatPt& p) { return {s * p.x, s * p.y}; }
RatPt perp(const RatPt& v) { return {-v.y, v.x}; }
Rational dot(const RatPt& a, const RatPt& b) { return a.x * b.x + a.y * b.y; }

Rational len2(const RatPt& a, const RatPt& b) {
  Rational dx = b.x - a.x;
  Rational dy = b.y - a.y;
  return dx * dx + dy * dy;
}

Rational det3(const RatPt& a, const RatPt& b, const RatPt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool collinear(const RatPt& a, const RatPt& b, const RatPt& c) {
  return det3(a, b, c).sgn() == 0;
}

Turn compose(const Turn& p, const Turn& q) {
  return {p.c * q.c - p.s * q.s, p.s * q.c + p.c * q.s};
}

Turn inverse(const Turn& t) { return {t.c, -t.s}; }

RatPt rotate(const Turn& t, const RatPt& v) {
  return {t.c * v.x - t.s * v.y, t.s * v.x + t.c * v.y};
}

Turn random_upper_turn(Rng& rng) {
  // (m^2 - k^2, 2mk) / (m^2 + k^2) with 0 < k < m keeps the second
  // component strictly positive.
  long m = rng.range(2, 5);
  long k = rng.range(1, m - 1);
  Rational den(Int(m * m + k * k));
  Rational c = Rational(Int(m * m - k * k)) / den;
  Rational s = Rational(Int(2 * m * k)) / den;
  if (rng.coin()) std::swap(c, s);  // complement angle, still in the open upper half
  if (rng.coin()) c = -c;           // reflect into the second quadrant
  return {c, s};
}

Turn random_turn(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: {
      Turn t = random_upper_turn(rng);
      if (rng.coin()) t.s = -t.s;
      return t;
    }
  }
}

RatPt Motion::apply(const RatPt& p) const {
  RatPt q = p;
  if (mirror) q.y = -q.y;
  q = rotate(turn, q);
  return q + shift;
}

Motion random_motion(Rng& rng) {
  Motion m;
  m.turn = random_turn(rng);
  m.mirror = rng.coin();
  m.shift = {rng.rat(), rng.rat()};
  return m;
}

RatPt random_point(Rng& rng, long mag, long den_mag) {
  return {rng.rat(mag, den_mag), rng.rat(mag, den_mag)};
}

RatPt random_point_apart(Rng& rng, const RatPt& avoid) {
  for (;;) {
    RatPt p = random_point(rng);
    if (p.x != avoid.x || p.y != avoid.y) return p;
  }
}

std::vector<Point> to_points(const std::vector<RatPt>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const RatPt& p : pts) out.push_back(Point::rational(p.x, p.y));
  return out;
}

}  // namespace geo::verifier::detail
