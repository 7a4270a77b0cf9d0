#include "geo/quad.hpp"
#include <utility>

namespace geo {

void Quad::canonicalize(const Rational& d_in) {
  if (d_in.sgn() < 0 && q_.sgn() != 0) throw NegativeInput("negative radicand");
  if (q_.sgn() == 0 || d_in.sgn() == 0) {
    q_ = Rational(0);
    d_ = 0;
    return;
  }
  // sqrt(P/Q) = sqrt(P*Q)/Q: clear the radicand to an integer.
  Int P = d_in.num(), Q = d_in.den();
  d_ = P * Q;
  if (Q != 1) q_ = q_ / Rational(Q);
  // Extract square content so equal fields share one radicand: trial
  // division for small primes, then a perfect-square check on the rest
  // (which catches everything this kernel ever builds).
  for (Int f(2); f * f <= d_ && f <= 10000; ++f) {
    const Int ff = f * f;
    while (d_ % ff == 0) {
      d_ /= ff;
      q_ = q_ * Rational(f);
    }
  }
  if (mpz_perfect_square_p(d_.get_mpz_t()) != 0) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    p_ += q_ * Rational(root);
    q_ = Rational(0);
    d_ = 0;
  }
}

Quad::Quad(const Rational& p, const Rational& q, const Rational& d) : p_(p), q_(q), d_(0) {
  canonicalize(d);
}

Quad::Quad(Rational p, Rational q, Int d, CanonicalTag)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_.sgn() == 0) d_ = 0;
}

Quad Quad::sqrt_rational(const Rational& r) {
  if (r.sgn() < 0) throw NegativeInput("sqrt of negative rational");
  return Quad(Rational(0), Rational(1), r);
}

const Rational& Quad::rat() const {
  if (!is_rational()) throw IrrationalInput("quadratic value is not rational");
  return p_;
}

int Quad::sgn() const {
  if (q_.sgn() == 0) return p_.sgn();
  if (p_.sgn() == 0) return q_.sgn();
  if (p_.sgn() == q_.sgn()) return p_.sgn();
  // Opposite signs: |p| vs |q|*sqrt(d) decided by squaring.
  int c = cmp(p_ * p_, q_ * q_ * Rational(d_));
  return p_.sgn() > 0 ? (c >= 0 ? (c == 0 ? 0 : 1) : -1) : (c > 0 ? -1 : (c == 0 ? 0 : 1));
}

bool Quad::compatible(const Quad& a, const Quad& b) {
  return a.is_rational() || b.is_rational() || a.d_ == b.d_;
}

namespace {

[[noreturn]] void incompatible() {
  throw IrrationalInput("mixing distinct radicals in quadratic arithmetic");
}

}  // namespace

Quad operator+(const Quad& a, const Quad& b) {
  if (!Quad::compatible(a, b)) incompatible();
  Int d = a.is_rational() ? b.d() : a.d();
  return Quad(a.p() + b.p(), a.q() + b.q(), d, Quad::CanonicalTag{});
}

Quad operator-(const Quad& a, const Quad& b) {
  if (!Quad::compatible(a, b)) incompatible();
  Int d = a.is_rational() ? b.d() : a.d();
  return Quad(a.p() - b.p(), a.q() - b.q(), d, Quad::CanonicalTag{});
}

Quad Quad::operator-() const {
  return Quad(-p_, -q_, d_, CanonicalTag{});
}

Quad operator*(const Quad& a, const Quad& b) {
  if (!Quad::compatible(a, b)) incompatible();
  Int d = a.is_rational() ? b.d() : a.d();
  Rational rd(d);
  return Quad(a.p() * b.p() + a.q() * b.q() * rd, a.p() * b.q() + a.q() * b.p(), d,
              Quad::CanonicalTag{});
}

Quad operator/(const Quad& a, const Quad& b) {
  if (b.sgn() == 0) throw Error("quadratic division by zero");
  if (!Quad::compatible(a, b)) incompatible();
  if (b.is_rational()) {
    return Quad(a.p() / b.p(), a.q() / b.p(), a.d(), Quad::CanonicalTag{});
  }
  // Multiply by the conjugate; the norm p^2 - q^2 d is rational and nonzero.
  Rational rd(b.d());
  Rational norm = b.p() * b.p() - b.q() * b.q() * rd;
  Quad conj(b.p() / norm, -(b.q() / norm), b.d(), Quad::CanonicalTag{});
  return a * conj;
}

int Quad::cmp(const Quad& a, const Quad& b) {
  if (compatible(a, b)) return (a - b).sgn();
  // A + B*sqrt(r) + C*sqrt(s) with r != s, B,C != 0: compare U = A + B*sqrt(r)
  // against V = -C*sqrt(s); with equal strict signs, compare squares (still
  // one radical each side).
  Rational A = a.p_ - b.p_;
  const Rational& B = a.q_;
  Rational C = -b.q_;
  Quad U(A, B, a.d_, CanonicalTag{});
  Quad V(Rational(0), -C, b.d_, CanonicalTag{});
  int su = U.sgn(), sv = V.sgn();
  if (su != sv) return su > sv ? 1 : -1;
  if (su == 0) return 0;
  Quad w(A * A + B * B * Rational(a.d_) - C * C * Rational(b.d_), 2 * A * B, a.d_,
         CanonicalTag{});
  int c = w.sgn();
  return su > 0 ? c : -c;
}

std::string Quad::str() const {
  if (is_rational()) return p_.str();
  std::string s = p_.sgn() != 0 ? p_.str() + " + " : "";
  return s + q_.str() + "*sqrt(" + d_.get_str() + ")";
}

std::optional<Quad> quad_sqrt(const Quad& v) {
  int s = v.sgn();
  if (s < 0) return std::nullopt;
  if (s == 0) return Quad();
  if (v.is_rational()) {
    if (auto r = v.rat().exact_sqrt()) return Quad(*r);
    return Quad::sqrt_rational(v.rat());
  }
  // Try v = (x + y*sqrt(d))^2, i.e. x^2 + y^2 d = p and 2xy = q.  Then x^2 is
  // a root of 4X^2 - 4pX + q^2 d = 0, so x^2 = (p +- sqrt(p^2 - q^2 d)) / 2
  // and the norm p^2 - q^2 d must be a rational square.
  Rational rd{v.d()};
  Rational norm = v.p() * v.p() - v.q() * v.q() * rd;
  if (norm.sgn() < 0) return std::nullopt;
  auto norm_root = norm.exact_sqrt();
  if (!norm_root) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational x2 = (v.p() + Rational(sign) * *norm_root) / Rational(2);
    if (x2.sgn() <= 0) continue;  // x == 0 would force q == 0
    auto x = x2.exact_sqrt();
    if (!x) continue;
    Rational y = v.q() / (Rational(2) * *x);
    Quad root(*x, y, Int(v.d()), Quad::CanonicalTag{});
    if (root.sgn() < 0) root = -root;
    if (root * root == v) return root;
  }
  return std::nullopt;
}

std::optional<Int> unify_radical(std::span<const Quad> qs) {
  Int d = 0;
  for (const Quad& q : qs) {
    if (q.is_rational()) continue;
    if (d == 0) {
      d = q.d();
    } else if (d != q.d()) {
      return std::nullopt;
    }
  }
  return d;
}

}  // namespace geo
