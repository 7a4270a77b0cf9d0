#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geo/point.hpp"

namespace geo::detail {

// Coordinates of a point set, all in one quadratic extension.
struct ExactPts {
  std::vector<Quad> x, y;
};

std::optional<ExactPts> gather_exact(std::span<const Point> pts);

Quad q_len2(const ExactPts& e, std::size_t i, std::size_t j);
Quad q_det(const ExactPts& e, std::size_t i, std::size_t j, std::size_t k);

std::optional<Quad> exact_len2(const Point& a, const Point& b);
std::optional<Quad> exact_det(const Point& a, const Point& b, const Point& c);

// Squared distance / orientation determinant as lazy reals; exact results are
// routed through the quadratic form when available so the real path inherits
// a single radical instead of a deep expression tree.
Real len2_real(const Point& a, const Point& b);
Real det_real(const Point& a, const Point& b, const Point& c);
Real real_zero();

}  // namespace geo::detail
