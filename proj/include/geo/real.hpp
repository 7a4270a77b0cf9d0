#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "geo/rational.hpp"

namespace geo {

// Budget for semi-decidable comparisons and for serialization accuracy.
struct Fuel {
  unsigned long max_index = 1ul << 16;  // largest approximant index probed by witness search
  unsigned precision_bits = 40;         // reporting accuracy: 1/2^precision_bits
};

// Default fuel, honoring a GEO_FUEL environment override for max_index.
Fuel default_fuel();

struct WitnessIndex {
  Int n;
};

// A real number as a regular integer sequence: an integer approximant x(n)
// per positive index n, value = lim x(n)/n, with the regularity bound
// |i*x(j) - j*x(i)| <= 2(i+j).  Every constructor below maintains the
// equivalent pointwise form |x(n) - n*value| <= 2, stated per operation.
// Approximants are memoized; instances are immutable and safe to share
// across threads (concurrent fills recompute idempotently).
class Real {
 public:
  Real();  // zero

  static Real from_rational(const Rational& q);

  // x(n); n must be positive.  May throw NegativeInput lazily for sqrt nodes.
  Int at(const Int& n) const;

  // A rational within 1/k of the value, returned as x(2k)/(2k).
  Rational approx(const Int& k) const;

  friend Real real_add(const Real& a, const Real& b);
  friend Real real_neg(const Real& a);
  friend Real real_sub(const Real& a, const Real& b);
  friend Real real_mul(const Real& a, const Real& b);
  friend Real real_sqrt(const Real& a);
  friend Real real_recip_pos(const Real& a, const WitnessIndex& w);

 private:
  struct Rep;
  explicit Real(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}
  static Real make(std::function<Int(const Int&)> fn);
  std::shared_ptr<Rep> rep_;
};

Real real_add(const Real& a, const Real& b);
Real real_neg(const Real& a);
Real real_sub(const Real& a, const Real& b);
Real real_mul(const Real& a, const Real& b);

// Square root of a nonnegative real.  Throws NegativeInput if some queried
// approximant certifies the value negative; tiny negative approximants of a
// genuine zero are clamped.
Real real_sqrt(const Real& a);

// Reciprocal of a real certified positive by w (a(w.n) >= 5, so value >= 1/w.n).
// Internal plumbing for constructions on witness-backed denominators.
Real real_recip_pos(const Real& a, const WitnessIndex& w);

// Semi-decidable strict order: searches for an index n with x(n) > y(n) + 4.
// Such an index proves value(x) - value(y) >= (x(n)-y(n)-4)/n >= 1/n > 0.
// Never reports a refutation: absence of a witness within fuel is Unknown.
struct RealVerdict {
  bool holds = false;
  std::optional<WitnessIndex> witness;  // set iff holds; least index in the probed set
};
RealVerdict real_gt(const Real& a, const Real& b, const Fuel& fuel);

// Given a witness w for a > b, decides a > z or z > b (at least one must
// hold) and returns a re-verifiable witness for the chosen side.
struct CotransSplit {
  enum class Side { AGtZ, ZGtB };
  Side side;
  WitnessIndex witness;
};
CotransSplit real_cotrans(const Real& a, const Real& b, const Real& z, const WitnessIndex& w);

}  // namespace geo
