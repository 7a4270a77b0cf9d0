#include "geo/real.hpp"

#include <cstdlib>
#include <utility>

namespace geo {

Fuel default_fuel() {
  Fuel f;
  if (const char* env = std::getenv("GEO_FUEL")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) f.max_index = v;
  }
  return f;
}

struct Real::Rep {
  std::function<Int(const Int&)> fn;
  std::mutex mu;
  std::map<Int, Int> memo;
};

Real Real::make(std::function<Int(const Int&)> fn) {
  auto rep = std::make_shared<Rep>();
  rep->fn = std::move(fn);
  return Real(std::move(rep));
}

Real::Real() : rep_() { *this = from_rational(Rational(0)); }

Real Real::from_rational(const Rational& q) {
  // x(n) = round(n*q), so |x(n) - n*q| <= 1/2.
  return make([q](const Int& n) { return (Rational(n) * q).round_half_away(); });
}

Int Real::at(const Int& n) const {
  if (n <= 0) throw Error("approximant index must be positive");
  {
    std::lock_guard<std::mutex> lk(rep_->mu);
    auto it = rep_->memo.find(n);
    if (it != rep_->memo.end()) return it->second;
  }
  Int v = rep_->fn(n);  // computed unlocked; pure, so a concurrent fill agrees
  std::lock_guard<std::mutex> lk(rep_->mu);
  return rep_->memo.emplace(n, std::move(v)).first->second;
}

Rational Real::approx(const Int& k) const {
  if (k <= 0) throw Error("approximation denominator must be positive");
  Int m = 2 * k;
  return Rational(at(m), m);  // |x(m)/m - value| <= 2/m = 1/k
}

Real real_add(const Real& a, const Real& b) {
  // Query at m = 4n: |(a(m)+b(m))/4 - n*(va+vb)| <= (2+2)/4 = 1, plus 1/2 rounding.
  return Real::make([a, b](const Int& n) {
    Int m = 4 * n;
    return Rational(a.at(m) + b.at(m), 4).round_half_away();
  });
}

Real real_neg(const Real& a) {
  return Real::make([a](const Int& n) { return Int(-a.at(n)); });
}

Real real_sub(const Real& a, const Real& b) {
  return Real::make([a, b](const Int& n) {
    Int m = 4 * n;
    return Rational(a.at(m) - b.at(m), 4).round_half_away();
  });
}

Real real_mul(const Real& a, const Real& b) {
  // With Ba >= |va|, Bb >= |vb| (from the first approximant), the product of
  // the m-th approximants is within (2/m)(Ba+Bb+2) of va*vb; querying at
  // m = 4n(Ba+Bb+2) keeps n times that error at 1/2, plus 1/2 rounding.
  return Real::make([a, b](const Int& n) {
    Int ba = abs(a.at(1)) + 2;
    Int bb = abs(b.at(1)) + 2;
    Int m = 4 * n * (ba + bb + 2);
    return (Rational(n) * Rational(a.at(m) * b.at(m), m * m)).round_half_away();
  });
}

namespace {

// floor(sqrt(p)) over nonnegative rationals, to within 1/(den*scale) <= 1/target:
// sqrt(P/Q) = floor(sqrt(P*Q*s^2))/(Q*s) with error < 1/(Q*s).
Rational rational_sqrt_within(const Rational& p, const Int& target) {
  Int P = p.num(), Q = p.den();
  Int s = (target + Q - 1) / Q;
  if (s < 1) s = 1;
  Int scaled = P * Q * s * s;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root, Q * s);
}

}  // namespace

Real real_sqrt(const Real& a) {
  // Query at m = 8n^2 so the input error 2/m = 1/(4n^2) keeps the output
  // within 1/(2n) (sqrt is 1/2-Hoelder); the rational root adds 1/(4n).
  return Real::make([a](const Int& n) {
    Int m = 8 * n * n;
    Int av = a.at(m);
    if (av < -2) throw NegativeInput("sqrt of a value certified negative: x(" + m.get_str() + ") = " + av.get_str());
    if (av < 0) av = 0;
    Rational p(av, m);
    Rational s = rational_sqrt_within(p, 4 * n);
    return (Rational(n) * s).round_half_away();
  });
}

Real real_recip_pos(const Real& a, const WitnessIndex& w) {
  Int n0 = w.n;
  if (n0 <= 0 || a.at(n0) < 5) throw InvalidWitness("reciprocal witness does not certify positivity");
  // value >= (a(n0)-2)/n0 >= 1/n0.  Querying at m = 4*n0^2*n makes the
  // approximant r at least 1/(2n0), so |1/v - 1/r| <= (2/m)*(2n0^2) = 1/n.
  return Real::make([a, n0](const Int& n) {
    Int m = 4 * n0 * n0 * n;
    Int av = a.at(m);
    if (av <= 0) throw InvalidWitness("reciprocal of a value no longer certified positive");
    return (Rational(n) * Rational(m, av)).round_half_away();
  });
}

namespace {

bool gt_at(const Real& a, const Real& b, const Int& n) {
  return a.at(n) > b.at(n) + 4;
}

}  // namespace

RealVerdict real_gt(const Real& a, const Real& b, const Fuel& fuel) {
  // Geometric probe schedule 1,2,4,... capped by max_index (which is always
  // probed last if not itself a power of two).  On the first success, a linear
  // pass over the gap since the previous probe reports the least witness in
  // the probed set.
  Int max(static_cast<unsigned long>(fuel.max_index == 0 ? 1 : fuel.max_index));
  Int prev = 0;
  Int p = 1;
  while (true) {
    if (gt_at(a, b, p)) {
      for (Int n = prev + 1; n < p; ++n) {
        if (gt_at(a, b, n)) return {true, WitnessIndex{n}};
      }
      return {true, WitnessIndex{p}};
    }
    if (p >= max) return {false, std::nullopt};
    prev = p;
    p = 2 * p;
    if (p > max) p = max;
  }
}

CotransSplit real_cotrans(const Real& a, const Real& b, const Real& z, const WitnessIndex& w) {
  if (w.n <= 0 || !gt_at(a, b, w.n)) {
    throw InvalidWitness("cotransitivity input witness fails a(n) > b(n) + 4");
  }
  // value(a) - value(b) >= 1/n0, so at index N one of the two gaps clears 4
  // once N/n0 - 4 >= 10, i.e. by N = 14*n0; doubling from 2*n0 reaches that.
  Int n0 = w.n;
  for (Int N = 2 * n0;; N *= 2) {
    Int ga = a.at(N) - z.at(N);
    Int gb = z.at(N) - b.at(N);
    if (ga > 4 || gb > 4) {
      if (ga >= gb) return {CotransSplit::Side::AGtZ, WitnessIndex{N}};
      return {CotransSplit::Side::ZGtB, WitnessIndex{N}};
    }
    if (N > 64 * n0) throw Error("cotransitivity split failed to converge (witness inconsistent)");
  }
}

}  // namespace geo
