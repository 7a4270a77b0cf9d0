#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "geo/verdict.hpp"

namespace geo {

enum class RelationKind {
  PointApart,      // a#b: the points are at positive distance
  LenApart,        // ab # cd: one squared length strictly exceeds the other
  GeLen,           // ab >= cd: cd is not strictly longer
  PointSegApart,   // a # bc: a lies strictly on some side of line bc
  Equiv,           // a == b: negation of point apartness
  Col,             // col(abc): negation of a # bc
  Between,         // B(abc): collinear and ac is a longest side (non-strict)
  StrictBetween,   // B(abc) with both flanks apart
  Cong,            // ab == cd in length: negation of length apartness
  Out,             // out(p, ab): p on line ab, outside the open segment
  Parallel,        // ab || cd: apart endpoints, no straddling pair exists
};

std::size_t relation_arity(RelationKind k);
const char* relation_name(RelationKind k);
std::optional<RelationKind> relation_from_name(std::string_view s);

// Strict squared-length order |ab| > |cd|.  Exact coordinates decide
// outright (including across two different radicals); otherwise a witness
// search runs on the regular-sequence difference and cannot refute.
Verdict seg_gt(const Segment& ab, const Segment& cd, const Fuel& fuel);

// Strict leftness of a with respect to directed bc: orientation determinant
// strictly positive.
Verdict left(const Point& a, const Segment& bc, const Fuel& fuel);

Verdict relation(RelationKind k, std::span<const Point> pts, const Fuel& fuel);

// The six mutually covering positions of three collinear points, checked in
// this preference order.
enum class CollinearCase { Babc, Bcab, Bbca, EqAB, EqAC, EqBC };
const char* collinear_case_name(CollinearCase c);

// Requires exact coordinates and collinearity; returns the first case that
// holds.  Throws IrrationalInput / NotCollinear otherwise.
CollinearCase collinear_case(const Point& a, const Point& b, const Point& c);

}  // namespace geo
