#include "geo/rational.hpp"

namespace geo {

Rational Rational::parse(const std::string& s_in) {
  std::string s = s_in;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);  // mpz rejects an explicit plus
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s.c_str()));
    }
    Int num(s.substr(0, slash).c_str());
    Int den(s.substr(slash + 1).c_str());
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal: " + s);
  }
}

Int Rational::round_half_away() const {
  // v = q + r/den with r in [0, den); bump to q+1 when the fraction part
  // exceeds 1/2, or equals 1/2 with the value nonnegative (away from zero).
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  Int twice = 2 * r;
  if (twice > den() || (twice == den() && q >= 0)) q += 1;
  return q;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sgn() < 0) return std::nullopt;
  Int n = num(), d = den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace geo
