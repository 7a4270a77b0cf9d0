#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "geo/quad.hpp"

using geo::Int;
using geo::Quad;
using geo::Rational;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

// Double-precision stand-in used only to sanity-check exact signs: every
// value in these tests is far from the rounding noise floor.
double approx(const Quad& v) {
  const double p = mpq_get_d(v.p().raw().get_mpq_t());
  const double q = mpq_get_d(v.q().raw().get_mpq_t());
  const double d = v.d().get_d();
  return p + q * std::sqrt(d);
}

}  // namespace

TEST_CASE("canonical radicand") {
  // sqrt(8) = 2*sqrt(2)
  const Quad a(rat(0), rat(1), rat(8));
  CHECK(a.d() == 2);
  CHECK(a.q() == rat(2));
  // sqrt(1/2) = (1/2)*sqrt(2): rational radicand num*den
  const Quad b = Quad::sqrt_rational(rat(1, 2));
  CHECK(b.d() == 2);
  CHECK(b.q() == rat(1, 2));
  // perfect square folds into the rational part
  const Quad c(rat(1), rat(3), rat(9));
  CHECK(c.is_rational());
  CHECK(c.rat() == rat(10));
  // q == 0 forces d == 0
  const Quad z(rat(5), rat(0), rat(7));
  CHECK(z.d() == 0);
  CHECK_THROWS_AS(Quad(rat(0), rat(1), rat(-2)), geo::Error);
}

TEST_CASE("field arithmetic in one extension") {
  const Quad s2 = Quad::sqrt_rational(rat(2));
  const Quad x = Quad(rat(1)) + s2;       // 1 + sqrt 2
  const Quad y = Quad(rat(3)) - s2;       // 3 - sqrt 2
  CHECK(x + y == Quad(rat(4)));
  CHECK(x * y == Quad(rat(1), rat(2), rat(2)));  // 3 - 2 + (3-1) sqrt2
  CHECK(s2 * s2 == Quad(rat(2)));
  CHECK(x / x == Quad(rat(1)));
  CHECK((x * y) / y == x);
  CHECK(-x == Quad(rat(-1), rat(-1), rat(2)));
  // rational operands always compatible
  CHECK(Quad::compatible(s2, Quad(rat(7))));
  CHECK(Quad::compatible(s2, s2));
  CHECK(!Quad::compatible(s2, Quad::sqrt_rational(rat(3))));
  CHECK_THROWS_AS(s2 + Quad::sqrt_rational(rat(3)), geo::Error);
  CHECK_THROWS_AS(x / Quad(rat(0)), geo::Error);
}

TEST_CASE("sign and same-radical order") {
  const Quad s2 = Quad::sqrt_rational(rat(2));
  CHECK(s2.sgn() == 1);
  CHECK((-s2).sgn() == -1);
  CHECK(Quad(rat(0)).sgn() == 0);
  // 3 - 2*sqrt(2) > 0 (since 9 > 8), 2*sqrt(2) - 3 < 0
  CHECK(Quad(rat(3), rat(-2), rat(2)).sgn() == 1);
  CHECK(Quad(rat(-3), rat(2), rat(2)).sgn() == -1);
  // 1 + sqrt(2) = 1 + sqrt(2)
  CHECK(Quad::cmp(Quad(rat(1)) + s2, Quad(rat(1)) + s2) == 0);
}

TEST_CASE("cross-radical comparison agrees with numeric order") {
  // sqrt(2) + 1 vs sqrt(3) + something: exercises the nested-squaring route
  const std::vector<long> rads = {2, 3, 5, 7};
  for (long da : rads)
    for (long db : rads)
      for (long pa = -3; pa <= 3; ++pa)
        for (long pb = -3; pb <= 3; ++pb)
          for (long qa = -2; qa <= 2; ++qa)
            for (long qb = -2; qb <= 2; ++qb) {
              const Quad a(rat(pa), rat(qa), rat(da));
              const Quad b(rat(pb), rat(qb), rat(db));
              const double fa = approx(a), fb = approx(b);
              if (std::fabs(fa - fb) < 1e-9) continue;  // likely equal or too close
              const int want = fa < fb ? -1 : 1;
              CHECK(Quad::cmp(a, b) == want);
            }
}

TEST_CASE("cross-radical equalities") {
  // sqrt(8) == 2 sqrt(2) even when built through different constructors
  CHECK(Quad::sqrt_rational(rat(8)) == Quad(rat(0), rat(2), rat(2)));
  // sqrt(4/9) is rational
  CHECK(Quad::sqrt_rational(rat(4, 9)) == Quad(rat(2, 3)));
  // sqrt(12) vs sqrt(27): 2 sqrt3 < 3 sqrt3
  CHECK(Quad::cmp(Quad::sqrt_rational(rat(12)), Quad::sqrt_rational(rat(27))) < 0);
}

TEST_CASE("unify_radical") {
  const Quad s2 = Quad::sqrt_rational(rat(2));
  const Quad s3 = Quad::sqrt_rational(rat(3));
  const Quad r(rat(5));
  std::vector<Quad> all_rat = {r, Quad(rat(1, 2))};
  CHECK(geo::unify_radical(all_rat) == Int(0));
  std::vector<Quad> one = {r, s2, s2 + Quad(rat(1))};
  CHECK(geo::unify_radical(one) == Int(2));
  std::vector<Quad> clash = {s2, s3};
  CHECK(!geo::unify_radical(clash).has_value());
}

TEST_CASE("quad_sqrt") {
  // rational inputs: exact root or a fresh single radical
  auto r = geo::quad_sqrt(Quad(rat(9, 4)));
  REQUIRE(r.has_value());
  CHECK(*r == Quad(rat(3, 2)));
  r = geo::quad_sqrt(Quad(rat(2)));
  REQUIRE(r.has_value());
  CHECK(*r == Quad::sqrt_rational(rat(2)));
  CHECK(!geo::quad_sqrt(Quad(rat(-1))).has_value());

  // (1 + sqrt(2))^2 = 3 + 2 sqrt(2): root recovered in the same field
  const Quad s2 = Quad::sqrt_rational(rat(2));
  const Quad v = (Quad(rat(1)) + s2) * (Quad(rat(1)) + s2);
  r = geo::quad_sqrt(v);
  REQUIRE(r.has_value());
  CHECK(*r == Quad(rat(1)) + s2);
  CHECK(r->sgn() >= 0);
  CHECK(*r * *r == v);

  // negative irrational value has no root
  CHECK(!geo::quad_sqrt(-v).has_value());

  // sqrt(sqrt(2)) would nest radicals: not representable
  CHECK(!geo::quad_sqrt(s2).has_value());

  // roundtrip sweep: squares of x + y sqrt(5) for small x, y
  const Quad s5 = Quad::sqrt_rational(rat(5));
  for (long x = -4; x <= 4; ++x)
    for (long y = -3; y <= 3; ++y) {
      const Quad w = Quad(rat(x)) + Quad(rat(y)) * s5;
      const auto root = geo::quad_sqrt(w * w);
      REQUIRE(root.has_value());
      CHECK(*root * *root == w * w);
      CHECK(root->sgn() >= 0);
    }
}

TEST_CASE("string form") {
  CHECK(Quad(rat(3, 2)).str() == "3/2");
  const Quad s2 = Quad::sqrt_rational(rat(2));
  CHECK((Quad(rat(1)) + s2).str().find("sqrt(2)") != std::string::npos);
}
