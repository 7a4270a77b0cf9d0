#pragma once

#include <cstdint>
#include <vector>

#include "geo/point.hpp"
#include "geo/rational.hpp"

namespace geo::verifier::detail {

std::uint64_t splitmix64(std::uint64_t x);

// Small deterministic generator; everything the sampler consumes flows
// through these helpers so an identical seed replays an identical instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi);
  bool coin();
  // num/den with num in [-mag, mag], den in [1, den_mag].
  Rational rat(long mag = 12, long den_mag = 8);
  // Nonzero variant of the above.
  Rational rat_nonzero(long mag = 12, long den_mag = 8);
  // Strictly positive k/den with k in [1, den*span], so value in (0, span].
  Rational rat_pos(long span = 4, long den = 16);
  // Strictly inside (0, 1): k/den with k in [1, den-1].
  Rational unit_open(long den = 16);

 private:
  std::uint64_t state_;
};

// Rational points for generator-side geometry; emitted as exact Points.
struct RatPt {
  Rational x, y;
};

RatPt operator+(const RatPt& a, const RatPt& b);
RatPt operator-(const RatPt& a, const RatPt& b);
RatPt operator*(const Rational& s, const RatPt& p);
// Quarter-turn counterclockwise.
RatPt perp(const RatPt& v);
Rational dot(const RatPt& a, const RatPt& b);
Rational len2(const RatPt& a, const RatPt& b);
// Positive exactly when c lies to the left of the ray a->b.
Rational det3(const RatPt& a, const RatPt& b, const RatPt& c);
bool collinear(const RatPt& a, const RatPt& b, const RatPt& c);

// A rational rotation as a unit vector (c, s) with c^2 + s^2 = 1.
struct Turn {
  Rational c, s;
};

Turn compose(const Turn& p, const Turn& q);
Turn inverse(const Turn& t);
RatPt rotate(const Turn& t, const RatPt& v);

// Random rational unit vector covering all four quadrants.
Turn random_turn(Rng& rng);
// Random unit vector with strictly positive second component.
Turn random_upper_turn(Rng& rng);

// Distance-preserving rational map: optional mirror, then rotation, then
// translation.
struct Motion {
  Turn turn;
  bool mirror = false;
  RatPt shift;

  RatPt apply(const RatPt& p) const;
};

Motion random_motion(Rng& rng);

RatPt random_point(Rng& rng, long mag = 10, long den_mag = 6);
// A point distinct from `avoid`.
RatPt random_point_apart(Rng& rng, const RatPt& avoid);

std::vector<Point> to_points(const std::vector<RatPt>& pts);

}  // namespace geo::verifier::detail
