#pragma once

#include <optional>
#include <span>
#include <string>

#include "geo/rational.hpp"

namespace geo {

// Exact value p + q*sqrt(d) in a single quadratic extension of the rationals.
// Canonical form: d is a nonnegative integer with any perfect-square content
// of a rational radicand folded out via d := num*den; q == 0 forces d == 0,
// and a perfect-square d is folded into p.  Values with the same d (or with
// either side rational) form a field with decidable sign, which is what lets
// ruler-and-compass outputs keep exact certificates.
class Quad {
 public:
  Quad() : p_(0), q_(0), d_(0) {}
  Quad(const Rational& r) : p_(r), q_(0), d_(0) {}  // NOLINT: implicit by design
  Quad(long n) : p_(Rational(n)), q_(0), d_(0) {}   // NOLINT
  Quad(const Rational& p, const Rational& q, const Rational& d);

  // sqrt(r) for r >= 0, exact.
  static Quad sqrt_rational(const Rational& r);

  bool is_rational() const { return q_.sgn() == 0; }
  const Rational& rat() const;  // value as a rational; throws if not one
  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Int& d() const { return d_; }

  int sgn() const;

  // Arithmetic requires compatible radicals (same d, or a rational operand).
  friend Quad operator+(const Quad& a, const Quad& b);
  friend Quad operator-(const Quad& a, const Quad& b);
  friend Quad operator*(const Quad& a, const Quad& b);
  friend Quad operator/(const Quad& a, const Quad& b);
  friend std::optional<Quad> quad_sqrt(const Quad& v);
  Quad operator-() const;

  friend bool operator==(const Quad& a, const Quad& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Quad& a, const Quad& b) { return cmp(a, b) != 0; }

  static bool compatible(const Quad& a, const Quad& b);

  // Exact three-way comparison; works across different radicals via nested
  // squaring (sign of A + B*sqrt(r) + C*sqrt(s) reduces to Quad signs).
  static int cmp(const Quad& a, const Quad& b);

  std::string str() const;

 private:
  struct CanonicalTag {};
  // Internal fast path: d is already a canonical radicand from an existing
  // value, so only the q == 0 collapse applies.
  Quad(Rational p, Rational q, Int d, CanonicalTag);

  Rational p_, q_;
  Int d_;
  void canonicalize(const Rational& d_in);
};

// Common radical of a set of quads: the unique nonzero d if at most one
// distinct nonzero d occurs, 0 if all rational, nullopt otherwise.
std::optional<Int> unify_radical(std::span<const Quad> qs);

// Nonnegative square root of v when it exists without nesting radicals:
// a rational v yields either its exact rational root or sqrt(v) itself as a
// new single-radical value; an irrational v = p + q*sqrt(d) yields a root in
// the same field iff its norm p^2 - q^2 d is a rational square that splits v
// as (x + y*sqrt(d))^2.  Returns nullopt when no such root exists (or v < 0).
std::optional<Quad> quad_sqrt(const Quad& v);

}  // namespace geo
