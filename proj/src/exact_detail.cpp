#include "exact_detail.hpp"

namespace geo::detail {

std::optional<ExactPts> gather_exact(std::span<const Point> pts) {
  ExactPts e;
  std::vector<Quad> all;
  for (const Point& p : pts) {
    if (!p.has_exact()) return std::nullopt;
    const ExactCoords& c = *p.exact_coords();
    e.x.push_back(c.x);
    e.y.push_back(c.y);
    all.push_back(c.x);
    all.push_back(c.y);
  }
  if (!unify_radical(all)) return std::nullopt;
  return e;
}

Quad q_len2(const ExactPts& e, std::size_t i, std::size_t j) {
  Quad dx = e.x[j] - e.x[i];
  Quad dy = e.y[j] - e.y[i];
  return dx * dx + dy * dy;
}

Quad q_det(const ExactPts& e, std::size_t i, std::size_t j, std::size_t k) {
  // Orientation of (i; j,k): (xj-xi)(yk-yi) - (yj-yi)(xk-xi).
  return (e.x[j] - e.x[i]) * (e.y[k] - e.y[i]) - (e.y[j] - e.y[i]) * (e.x[k] - e.x[i]);
}

std::optional<Quad> exact_len2(const Point& a, const Point& b) {
  const Point pts[2] = {a, b};
  auto e = gather_exact(pts);
  if (!e) return std::nullopt;
  return q_len2(*e, 0, 1);
}

std::optional<Quad> exact_det(const Point& a, const Point& b, const Point& c) {
  const Point pts[3] = {a, b, c};
  auto e = gather_exact(pts);
  if (!e) return std::nullopt;
  return q_det(*e, 0, 1, 2);
}

Real len2_real(const Point& a, const Point& b) {
  if (auto q = exact_len2(a, b)) return quad_to_real(*q);
  Real dx = real_sub(b.x(), a.x());
  Real dy = real_sub(b.y(), a.y());
  return real_add(real_mul(dx, dx), real_mul(dy, dy));
}

Real det_real(const Point& a, const Point& b, const Point& c) {
  if (auto q = exact_det(a, b, c)) return quad_to_real(*q);
  Real abx = real_sub(b.x(), a.x());
  Real aby = real_sub(b.y(), a.y());
  Real acx = real_sub(c.x(), a.x());
  Real acy = real_sub(c.y(), a.y());
  return real_sub(real_mul(abx, acy), real_mul(aby, acx));
}

Real real_zero() {
  static const Real zero = Real::from_rational(Rational(0));
  return zero;
}

}  // namespace geo::detail
